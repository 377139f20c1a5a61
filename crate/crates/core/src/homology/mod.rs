//! Exact integer linear algebra: Smith normal form, first homology of
//! one-vertex complexes and abelianization of finite presentations.

mod relator;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::complexes::{Presentation, LETTERS};

pub use relator::{generator_names, invert, parse_relator, Syllable, Word};
pub use snf::{determinant, smith_normal_form, SmithNormalForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("bad word: {0}")]
    Parse(String),
    #[error("rows of unequal length")]
    Ragged,
    #[error("dimension mismatch: {0}x{1} times {2}x{3}")]
    Dimensions(usize, usize, usize, usize),
    #[error("generator index {0} out of range for {1} generators")]
    GeneratorOutOfRange(usize, usize),
}

/// Dense matrix of exact integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, HomologyError> {
        IntMatrix::from_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_big(entries: Vec<Vec<BigInt>>) -> Result<Self, HomologyError> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::Ragged);
        }
        Ok(IntMatrix {
            rows: entries.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i][j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.cols != other.rows {
            return Err(HomologyError::Dimensions(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i][j] += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        Ok(out)
    }

    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        let entries = row_perm
            .iter()
            .map(|&i| col_perm.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }
}

/// A finitely generated abelian group `Z^r × Z/d1 × ... × Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn from_parts(free_rank: usize, torsion: &[u64]) -> Self {
        AbelianGroup {
            free_rank,
            torsion: torsion.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    /// Group presented by the rows of `m` as relations on `m.cols()`
    /// generators.
    pub fn cokernel_of_rows(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let torsion = snf
            .diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect();
        AbelianGroup {
            free_rank: m.cols() - snf.rank(),
            torsion,
        }
    }

    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbelianGroup", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|d| match d.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(d.to_string()),
            })
            .collect();
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// Boundary matrix: row per face, column per loop, entry the signed number
/// of occurrences of that loop in the face.
pub fn face_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.faces().len(), LETTERS);
    for (i, f) in p.faces().iter().enumerate() {
        for &s in f {
            let j = s.unsigned_abs() as usize - 1;
            let v = m.get(i, j) + BigInt::from(s.signum());
            m.set(i, j, v);
        }
    }
    m
}

/// `H_1 = Z^8 / im ∂₂`, the single vertex making `∂₁` vanish.
pub fn h1_of_complex(p: &Presentation) -> AbelianGroup {
    AbelianGroup::cokernel_of_rows(&face_matrix(p))
}

/// Abelianization of `<g_0, ..., g_{n-1} | relators>`.
pub fn abelianization(generators: usize, relators: &[Word]) -> Result<AbelianGroup, HomologyError> {
    let mut m = IntMatrix::zeros(relators.len(), generators);
    for (i, w) in relators.iter().enumerate() {
        for &(g, e) in w {
            if g >= generators {
                return Err(HomologyError::GeneratorOutOfRange(g, generators));
            }
            let v = m.get(i, g) + BigInt::from(e);
            m.set(i, g, v);
        }
    }
    if relators.is_empty() {
        return Ok(AbelianGroup {
            free_rank: generators,
            torsion: Vec::new(),
        });
    }
    Ok(AbelianGroup::cokernel_of_rows(&m))
}

/// Parses relations written over named generators and abelianizes.
pub fn abelianize_text(names: &[char], relators: &[&str]) -> Result<AbelianGroup, HomologyError> {
    let words = relators
        .iter()
        .map(|r| parse_relator(r, names))
        .collect::<Result<Vec<_>, _>>()?;
    abelianization(names.len(), &words)
}

/// `|det| == 1`.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    determinant(m).is_some_and(|d| d == BigInt::one() || d == -BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_abelianizes_to_free_abelian() {
        let g = abelianization(2, &[]).unwrap();
        assert_eq!(g, AbelianGroup::from_parts(2, &[]));
        assert_eq!(g.to_string(), "Z^2");
    }

    #[test]
    fn display_and_json() {
        let g = AbelianGroup::from_parts(2, &[3]);
        assert_eq!(g.to_string(), "Z/3 x Z^2");
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"free_rank":2,"torsion":[3]}"#);
        assert_eq!(AbelianGroup::from_parts(0, &[]).to_string(), "0");
    }

    #[test]
    fn cyclic_relator() {
        let g = abelianize_text(&['s'], &["s^6 = e"]).unwrap();
        assert_eq!(g, AbelianGroup::from_parts(0, &[6]));
    }

    #[test]
    fn generator_range_checked() {
        assert_eq!(
            abelianization(1, &[vec![(1, 1)]]),
            Err(HomologyError::GeneratorOutOfRange(1, 1))
        );
    }
}
