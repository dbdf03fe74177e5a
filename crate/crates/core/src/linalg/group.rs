use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{smith_normal_form, IntegerMatrix};

/// `Z^rank + Z/t_1 + Z/t_2 + ...` with every `t_i >= 2`, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct AbelianGroupStructure {
    pub rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for x in t {
        seq.serialize_element(&alloc::format!("{x}"))?;
    }
    seq.end()
}

impl AbelianGroupStructure {
    pub fn free(rank: usize) -> Self {
        AbelianGroupStructure { rank, torsion: Vec::new() }
    }

    pub fn new(rank: usize, mut torsion: Vec<BigInt>) -> Self {
        torsion.sort();
        AbelianGroupStructure { rank, torsion }
    }

    /// `Z^r + (Z/2)^s`.
    pub fn two_torsion(rank: usize, s: usize) -> Self {
        Self::new(rank, (0..s).map(|_| BigInt::from(2)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of `Z/2` summands (exact order 2).
    pub fn count_two(&self) -> usize {
        let two = BigInt::from(2);
        self.torsion.iter().filter(|t| **t == two).count()
    }

    /// Minimal number of generators.
    pub fn generators(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// `dim (G tensor Z/2)`.
    pub fn mod2_dimension(&self) -> usize {
        let two = BigInt::from(2);
        self.rank + self.torsion.iter().filter(|t| (*t % &two).is_zero()).count()
    }

    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Renders as `Z^r + (Z/d)^s`, omitting empty parts and exponents equal to one.
impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let n = self.torsion[i..].iter().take_while(|t| *t == d).count();
            if n == 1 {
                parts.push(alloc::format!("Z/{d}"));
            } else {
                parts.push(alloc::format!("(Z/{d})^{n}"));
            }
            i += n;
        }
        f.write_str(&parts.join(" + "))
    }
}

/// The cokernel of the row relations: `Z^ambient / rowspace(relations)`.
pub fn cokernel_structure(relations: &IntegerMatrix, ambient_dim: usize) -> AbelianGroupStructure {
    assert_eq!(relations.cols(), ambient_dim, "relation width must equal the ambient dimension");
    if relations.rows() == 0 {
        return AbelianGroupStructure::free(ambient_dim);
    }
    let snf = smith_normal_form(relations);
    let rank = ambient_dim - snf.rank();
    let torsion = snf.nonzero().filter(|d| !d.is_one()).cloned().collect();
    AbelianGroupStructure::new(rank, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relations_are_free() {
        let g = cokernel_structure(&IntegerMatrix::zeros(0, 2), 2);
        assert_eq!(g, AbelianGroupStructure::free(2));
    }

    #[test]
    fn single_two_relation() {
        let g = cokernel_structure(&IntegerMatrix::from_rows(2, [[2, 0]]), 2);
        assert_eq!(g, AbelianGroupStructure::two_torsion(1, 1));
    }

    #[test]
    fn rendering_grammar() {
        assert_eq!(AbelianGroupStructure::free(0).to_string(), "0");
        assert_eq!(AbelianGroupStructure::free(1).to_string(), "Z");
        assert_eq!(AbelianGroupStructure::two_torsion(0, 1).to_string(), "Z/2");
        assert_eq!(AbelianGroupStructure::two_torsion(2, 3).to_string(), "Z^2 + (Z/2)^3");
        let mixed = AbelianGroupStructure::new(0, alloc::vec![BigInt::from(4), BigInt::from(2)]);
        assert_eq!(mixed.to_string(), "Z/2 + Z/4");
    }
}
