use std::fmt;

use serde::{Deserialize, Serialize};

use super::ComplexError;

/// Number of faces, and of loops, in a one-vertex complex of this kind.
pub const FACES: usize = 8;
pub const LETTERS: usize = 8;

/// A face `[x, y, z]` of signed letters; a negative letter runs against the
/// orientation of its loop.
pub type Face = [i8; 3];

/// A one-vertex triangle complex given by its 8 faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presentation {
    faces: Vec<Face>,
}

#[derive(Deserialize, Serialize)]
struct PresentationFile {
    faces: Vec<Vec<i64>>,
}

impl Presentation {
    pub fn new(faces: Vec<Face>) -> Result<Self, ComplexError> {
        if faces.len() != FACES {
            return Err(ComplexError::FaceCount(faces.len()));
        }
        let mut count = [0usize; LETTERS + 1];
        for f in &faces {
            for &s in f {
                let a = s.unsigned_abs() as usize;
                if a == 0 || a > LETTERS {
                    return Err(ComplexError::LetterOutOfRange(s as i64));
                }
                count[a] += 1;
            }
        }
        for (letter, &c) in count.iter().enumerate().skip(1) {
            if c != 3 {
                return Err(ComplexError::LetterCount { letter, count: c });
            }
        }
        Ok(Presentation { faces })
    }

    pub fn from_rows(rows: &[[i8; 3]]) -> Result<Self, ComplexError> {
        Presentation::new(rows.to_vec())
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_orientable(&self) -> bool {
        self.faces.iter().flatten().all(|&s| s > 0)
    }

    /// Number of faces with two cyclically adjacent equal letters.
    pub fn adjacent_identifications(&self) -> usize {
        self.faces
            .iter()
            .filter(|f| f[0] == f[1] || f[1] == f[2] || f[2] == f[0])
            .count()
    }

    pub fn type_tag(&self) -> TypeTag {
        TypeTag::from_count(self.adjacent_identifications())
    }

    /// `1 - #edges + #faces` for the one-vertex complex.
    pub fn euler_characteristic(&self) -> i64 {
        1 - LETTERS as i64 + self.faces.len() as i64
    }

    /// The complex with every face read backwards.
    pub fn mirror(&self) -> Presentation {
        Presentation {
            faces: self.faces.iter().map(|f| [f[2], f[1], f[0]]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let file = PresentationFile {
            faces: self
                .faces
                .iter()
                .map(|f| f.iter().map(|&s| s as i64).collect())
                .collect(),
        };
        serde_json::to_string(&file).expect("plain integers serialize")
    }
}

/// `euler_characteristic` as a free function, matching the other operations.
pub fn euler_characteristic(p: &Presentation) -> i64 {
    p.euler_characteristic()
}

/// Reads `{"faces": [[1,2,6], ...]}`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ComplexError> {
    let file: PresentationFile =
        serde_json::from_str(text).map_err(|e| ComplexError::Parse(e.to_string()))?;
    let mut faces = Vec::with_capacity(file.faces.len());
    for row in file.faces {
        if row.len() != 3 {
            return Err(ComplexError::Parse(format!(
                "face with {} letters, expected 3",
                row.len()
            )));
        }
        let mut f = [0i8; 3];
        for (slot, &s) in f.iter_mut().zip(&row) {
            if s == 0 || s.unsigned_abs() as usize > LETTERS {
                return Err(ComplexError::LetterOutOfRange(s));
            }
            *slot = s as i8;
        }
        faces.push(f);
    }
    Presentation::new(faces)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, face) in self.faces.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[{},{},{}]", face[0], face[1], face[2])?;
        }
        write!(f, "]")
    }
}

/// Class label by number of adjacent identifications: I for none up to V
/// for four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TypeTag {
    I,
    II,
    III,
    IV,
    V,
    /// More than four adjacent identifications; never ample.
    Other,
}

impl TypeTag {
    pub fn from_count(k: usize) -> TypeTag {
        match k {
            0 => TypeTag::I,
            1 => TypeTag::II,
            2 => TypeTag::III,
            3 => TypeTag::IV,
            4 => TypeTag::V,
            _ => TypeTag::Other,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
            TypeTag::IV => "IV",
            TypeTag::V => "V",
            TypeTag::Other => "other",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const V0: [[i8; 3]; 8] = [
        [1, 2, 6],
        [2, 3, 7],
        [3, 4, 8],
        [4, 5, 1],
        [5, 6, 2],
        [6, 7, 3],
        [7, 8, 4],
        [8, 1, 5],
    ];

    #[test]
    fn parse_v0() {
        let p = parse_presentation(r#"{"faces": [[1,2,6],[2,3,7],[3,4,8],[4,5,1],[5,6,2],[6,7,3],[7,8,4],[8,1,5]]}"#).unwrap();
        assert_eq!(p.faces().len(), 8);
        assert!(p.is_orientable());
        assert_eq!(p, Presentation::from_rows(&V0).unwrap());
        assert_eq!(parse_presentation(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn wrong_letter_count_rejected() {
        let mut rows = V0;
        rows[0][0] = 5;
        assert_eq!(
            Presentation::from_rows(&rows),
            Err(ComplexError::LetterCount { letter: 1, count: 2 })
        );
    }

    #[test]
    fn wrong_face_count_rejected() {
        let r = parse_presentation(r#"{"faces": [[1,2,3],[1,2,3]]}"#);
        assert_eq!(r, Err(ComplexError::FaceCount(2)));
    }

    #[test]
    fn malformed_input_rejected() {
        assert!(matches!(parse_presentation("{faces"), Err(ComplexError::Parse(_))));
        assert!(matches!(
            parse_presentation(r#"{"faces": [[1,2]]}"#),
            Err(ComplexError::Parse(_))
        ));
        assert_eq!(
            parse_presentation(r#"{"faces": [[1,2,9]]}"#),
            Err(ComplexError::LetterOutOfRange(9))
        );
    }

    #[test]
    fn euler_characteristic_is_one() {
        assert_eq!(Presentation::from_rows(&V0).unwrap().euler_characteristic(), 1);
    }
}
