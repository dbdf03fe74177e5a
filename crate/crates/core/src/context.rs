//! Rings, maps and a per-context cache of graded pieces.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::maps::{catalog::bundled_maps, Homomorphism, MapMatrix, MapSpec};
use crate::monomial::Element;
use crate::presentations::{catalog::bundled_rings, GradedPiece, Ring, RingPresentation};

/// Every ring presentation and map definition, as exported to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub rings: Vec<RingPresentation>,
    pub maps: Vec<MapSpec>,
}

impl Catalog {
    pub fn bundled() -> Self {
        Catalog { rings: bundled_rings(), maps: bundled_maps() }
    }

    pub fn ring_mut(&mut self, name: &str) -> Option<&mut RingPresentation> {
        self.rings.iter_mut().find(|r| r.name == name)
    }

    /// Entries of `other` replace entries of the same name; new ones are appended.
    pub fn overlay(&mut self, other: Catalog) {
        for r in other.rings {
            match self.rings.iter_mut().find(|x| x.name == r.name) {
                Some(slot) => *slot = r,
                None => self.rings.push(r),
            }
        }
        for m in other.maps {
            match self.maps.iter_mut().find(|x| x.name == m.name) {
                Some(slot) => *slot = m,
                None => self.maps.push(m),
            }
        }
    }
}

/// Compiled catalog plus a memo of graded pieces. A context is cheap to
/// build; concurrent callers each use their own.
#[derive(Debug)]
pub struct Context {
    rings: BTreeMap<String, Ring>,
    maps: BTreeMap<String, Homomorphism>,
    pieces: RefCell<BTreeMap<(String, Bidegree), Rc<GradedPiece>>>,
}

impl Context {
    pub fn bundled() -> Self {
        Self::new(Catalog::bundled()).expect("the bundled catalog is valid")
    }

    pub fn new(catalog: Catalog) -> Result<Self> {
        let mut rings = BTreeMap::new();
        for r in catalog.rings {
            let name = r.name.clone();
            if rings.insert(name.clone(), Ring::new(r)?).is_some() {
                return Err(Error::InvalidCatalog(alloc::format!("duplicate ring {name}")));
            }
        }
        let mut maps = BTreeMap::new();
        for m in catalog.maps {
            let src = rings.get(&m.source).ok_or_else(|| Error::UnknownRing(m.source.clone()))?;
            let tgt = rings.get(&m.target).ok_or_else(|| Error::UnknownRing(m.target.clone()))?;
            let name = m.name.clone();
            if maps.insert(name.clone(), Homomorphism::new(m, src, tgt)?).is_some() {
                return Err(Error::InvalidCatalog(alloc::format!("duplicate map {name}")));
            }
        }
        Ok(Context { rings, maps, pieces: RefCell::new(BTreeMap::new()) })
    }

    pub fn catalog(&self) -> Catalog {
        Catalog {
            rings: self.rings.values().map(|r| r.spec().clone()).collect(),
            maps: self.maps.values().map(|m| m.spec().clone()).collect(),
        }
    }

    pub fn ring_names(&self) -> impl Iterator<Item = &str> {
        self.rings.keys().map(String::as_str)
    }

    pub fn map_names(&self) -> impl Iterator<Item = &str> {
        self.maps.keys().map(String::as_str)
    }

    pub fn ring(&self, name: &str) -> Result<&Ring> {
        self.rings.get(name).ok_or_else(|| Error::UnknownRing(name.into()))
    }

    pub fn map(&self, name: &str) -> Result<&Homomorphism> {
        self.maps.get(name).ok_or_else(|| Error::UnknownMap(name.into()))
    }

    pub fn piece(&self, ring: &str, deg: Bidegree) -> Result<Rc<GradedPiece>> {
        let key = (String::from(ring), deg);
        if let Some(p) = self.pieces.borrow().get(&key) {
            return Ok(p.clone());
        }
        let piece = Rc::new(self.ring(ring)?.graded_piece(deg)?);
        self.pieces.borrow_mut().insert(key, piece.clone());
        Ok(piece)
    }

    pub fn parse(&self, ring: &str, text: &str) -> Result<Element> {
        self.ring(ring)?.parse(text)
    }

    pub fn apply(&self, map: &str, x: &Element) -> Result<Element> {
        let h = self.map(map)?;
        h.apply(self.ring(h.source())?, self.ring(h.target())?, x)
    }

    /// Target degree of `map` applied in bidegree `deg`.
    pub fn target_degree(&self, map: &str, deg: Bidegree) -> Result<Bidegree> {
        Ok(self.map(map)?.target_degree(deg))
    }

    pub fn map_matrix(&self, map: &str, deg: Bidegree) -> Result<MapMatrix> {
        let h = self.map(map)?;
        let src = self.ring(h.source())?;
        let tgt = self.ring(h.target())?;
        let sp = self.piece(h.source(), deg)?;
        let tp = self.piece(h.target(), h.target_degree(deg))?;
        h.matrix(src, tgt, &sp, &tp)
    }

    /// Normal form of a homogeneous element of `ring`.
    pub fn normal_form(&self, ring: &str, x: &Element) -> Result<Element> {
        let r = self.ring(ring)?;
        match r.element_degree(x)? {
            None => Ok(r.zero()),
            Some(d) => self.piece(ring, d)?.normal_form(x),
        }
    }

    /// Zero test in the ring (not just as a formal sum).
    pub fn is_zero(&self, ring: &str, x: &Element) -> Result<bool> {
        let r = self.ring(ring)?;
        match r.element_degree(x)? {
            None => Ok(true),
            Some(d) => {
                if r.check_degree(d).is_err() {
                    return Err(Error::Inconsistent(alloc::format!("{ring} has no degree {d}")));
                }
                self.piece(ring, d)?.is_zero(x)
            }
        }
    }

    pub fn render(&self, ring: &str, x: &Element) -> Result<String> {
        Ok(self.ring(ring)?.render_element(x))
    }
}
