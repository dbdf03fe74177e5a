//! Homomorphisms between the rings and their matrices on graded pieces.

pub mod catalog;
mod spec;

pub use spec::{GeneratorImage, MapKind, MapSpec};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::linalg::{BitMatrix, BitVec, IntegerMatrix};
use crate::monomial::{Coefficients, Element, Monomial};
use crate::presentations::{GradedPiece, Ring, Template};

/// A validated map definition.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    spec: MapSpec,
    images: BTreeMap<String, Template>,
    formula: Option<MonomialRule>,
}

type MonomialRule = fn(&Ring, &Ring, &Monomial) -> Result<Element>;

fn builtin_formula(name: &str) -> Option<MonomialRule> {
    match name {
        catalog::BETA_TILDE_FORMULA => Some(beta_tilde_classical),
        _ => None,
    }
}

/// `w2^(2a)·w3^b·w4^c ↦ 0` and
/// `w2^(2a+1)·w3^b·w4^c ↦ p1^a·sqrt_p2^c·bw2^(b+1)`.
fn beta_tilde_classical(src: &Ring, tgt: &Ring, m: &Monomial) -> Result<Element> {
    let w2 = m.exponent(src.key("w2", None)?);
    let w3 = m.exponent(src.key("w3", None)?);
    let w4 = m.exponent(src.key("w4", None)?);
    if w2 < 0 || w3 < 0 || w4 < 0 || w2 + w3 + w4 != m.factors().map(|(_, e)| *e).sum::<i32>() {
        return Err(Error::Inconsistent("integral Bockstein applied outside Z/2[w2,w3,w4]".into()));
    }
    if w2 % 2 == 0 {
        return Ok(tgt.zero());
    }
    let image = Monomial::from_factors([
        (tgt.key("p1", None)?, w2 / 2),
        (tgt.key("sqrt_p2", None)?, w4),
        (tgt.key("bw2", None)?, w3 + 1),
    ]);
    Ok(tgt.monomial_element(image))
}

impl Homomorphism {
    pub fn new(spec: MapSpec, source: &Ring, target: &Ring) -> Result<Self> {
        let bad = |msg: String| Error::InvalidCatalog(alloc::format!("map {}: {msg}", spec.name));
        if source.name() != spec.source || target.name() != spec.target {
            return Err(bad("source or target mismatch".into()));
        }
        if spec.forget_weight != (source.is_bigraded() && !target.is_bigraded()) {
            return Err(bad("weight handling does not match the target grading".into()));
        }
        let mut images = BTreeMap::new();
        for gi in &spec.images {
            source.generator(&gi.generator)?;
            for g in gi.image.generators() {
                target.generator(g)?;
            }
            if images.insert(gi.generator.clone(), gi.image.clone()).is_some() {
                return Err(bad(alloc::format!("two images for {}", gi.generator)));
            }
        }
        let formula = match spec.kind {
            MapKind::MonomialFormula => {
                let name = spec.formula.as_deref().ok_or_else(|| bad("missing formula".into()))?;
                Some(builtin_formula(name).ok_or_else(|| bad(alloc::format!("unknown formula {name}")))?)
            }
            _ => {
                for g in source.generators() {
                    if !images.contains_key(&g.name) {
                        return Err(bad(alloc::format!("no image for {}", g.name)));
                    }
                }
                None
            }
        };
        if spec.kind == MapKind::Derivation
            && (source.coefficients() != Coefficients::Mod2 || spec.source != spec.target)
        {
            return Err(bad("derivations are endomorphisms of Z/2 rings".into()));
        }
        Ok(Homomorphism { spec, images, formula })
    }

    pub fn spec(&self) -> &MapSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn source(&self) -> &str {
        &self.spec.source
    }

    pub fn target(&self) -> &str {
        &self.spec.target
    }

    pub fn kind(&self) -> MapKind {
        self.spec.kind
    }

    pub fn target_degree(&self, src: Bidegree) -> Bidegree {
        self.spec.target_degree(src)
    }

    fn generator_image(&self, src: &Ring, tgt: &Ring, key: crate::GenKey) -> Result<Element> {
        let g = src.generator_of(key);
        let t = self.images.get(&g.name).ok_or_else(|| Error::UnknownGenerator {
            ring: src.name().into(),
            name: g.name.clone(),
        })?;
        t.instantiate(tgt, key.param)
    }

    /// Image of a (homogeneous) element in the target ring.
    pub fn apply(&self, src: &Ring, tgt: &Ring, x: &Element) -> Result<Element> {
        let mut out = tgt.zero();
        for (m, c) in x.terms() {
            let img = match self.spec.kind {
                MapKind::RingMap => self.apply_ring_map(src, tgt, m)?,
                MapKind::Derivation => self.apply_derivation(src, tgt, m)?,
                MapKind::MonomialFormula => {
                    (self.formula.expect("checked at construction"))(src, tgt, m)?
                }
            };
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    fn apply_ring_map(&self, src: &Ring, tgt: &Ring, m: &Monomial) -> Result<Element> {
        let mut img = tgt.one();
        for (&key, &e) in m.factors() {
            let g = self.generator_image(src, tgt, key)?;
            let base = if e > 0 {
                g
            } else {
                match g.clone().into_terms().as_slice() {
                    [(gm, gc)] if gc.abs().is_one() => Element::term(tgt.coefficients(), gm.pow(-1), gc.clone()),
                    _ => {
                        return Err(Error::Inconsistent(alloc::format!(
                            "{}: negative power of {} needs a unit image",
                            self.spec.name,
                            src.key_name(key)
                        )))
                    }
                }
            };
            img = tgt.mul(&img, &tgt.pow(&base, e.unsigned_abs()));
        }
        Ok(img)
    }

    fn apply_derivation(&self, src: &Ring, tgt: &Ring, m: &Monomial) -> Result<Element> {
        let mut out = tgt.zero();
        for (&key, &e) in m.factors() {
            let d = self.generator_image(src, tgt, key)?;
            if d.is_zero() {
                continue;
            }
            let rest = m.div(&Monomial::generator(key));
            let term = tgt.mul(&tgt.monomial_element(rest), &d).scale(&BigInt::from(e));
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Columns are images of the source basis in target basis coordinates.
    pub fn matrix(
        &self,
        src: &Ring,
        tgt: &Ring,
        src_piece: &GradedPiece,
        tgt_piece: &GradedPiece,
    ) -> Result<MapMatrix> {
        let rows = tgt_piece.dim();
        let cols = src_piece.dim();
        let mut matrix = IntegerMatrix::zeros(rows, cols);
        for (j, b) in src_piece.basis().iter().enumerate() {
            let img = self.apply(src, tgt, &src.monomial_element(b.monomial.clone()))?;
            let coords = tgt_piece.coordinates(&img).map_err(|e| match e {
                Error::Inconsistent(msg) => Error::Inconsistent(alloc::format!(
                    "{}({}) does not reduce into {} at {}: {msg}",
                    self.spec.name,
                    src.render_monomial(&b.monomial),
                    tgt.name(),
                    tgt_piece.degree()
                )),
                other => other,
            })?;
            for (i, c) in coords.into_iter().enumerate() {
                matrix[(i, j)] = c;
            }
        }
        Ok(MapMatrix {
            map: self.spec.name.clone(),
            source: src_piece.degree(),
            target: tgt_piece.degree(),
            coefficients: tgt.coefficients(),
            matrix,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapMatrix {
    pub map: String,
    pub source: Bidegree,
    pub target: Bidegree,
    /// Coefficients of the target ring.
    pub coefficients: Coefficients,
    /// `rows = dim target`, `cols = dim source`.
    pub matrix: IntegerMatrix,
}

impl MapMatrix {
    pub fn mod2(&self) -> BitMatrix {
        BitMatrix::from_integer(&self.matrix)
    }

    pub fn rank_mod2(&self) -> usize {
        self.mod2().rank()
    }

    pub fn column_mod2(&self, j: usize) -> BitVec {
        BitVec::from_bits(self.matrix.column(j).iter().map(num_integer::Integer::is_odd))
    }

    /// Restriction to a subset of source columns.
    pub fn select_columns(&self, cols: &[usize]) -> MapMatrix {
        let rows = self.matrix.rows();
        let mut m = IntegerMatrix::zeros(rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, jj)] = self.matrix[(i, j)].clone();
            }
        }
        MapMatrix { matrix: m, ..self.clone() }
    }
}

impl Homomorphism {
    /// All source generator images, rendered (for export and display).
    pub fn rendered_images(&self) -> Vec<(String, String)> {
        self.spec.images.iter().map(|g| (g.generator.clone(), g.image.to_string())).collect()
    }
}
