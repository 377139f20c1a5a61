//! The thirteen published one-vertex complexes with their first homology and
//! a presentation of the fundamental group.

use super::Presentation;

/// A named complex with reference data.
#[derive(Clone, Copy, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub faces: [[i8; 3]; 8],
    /// Published first homology: free rank and torsion divisors.
    pub h1_free_rank: usize,
    pub h1_torsion: &'static [u64],
    /// Generator names of the published group presentation.
    pub generators: &'static str,
    /// Published relations, in the syntax of `homology::parse_relator`.
    pub relators: &'static [&'static str],
}

impl Preset {
    pub fn presentation(&self) -> Presentation {
        Presentation::from_rows(&self.faces).expect("preset faces are valid")
    }

    pub fn h1_text(&self) -> String {
        crate::homology::AbelianGroup::from_parts(self.h1_free_rank, self.h1_torsion).to_string()
    }
}

pub const PRESETS: [Preset; 13] = [
    Preset {
        name: "V0",
        faces: [[1, 2, 6], [2, 3, 7], [3, 4, 8], [4, 5, 1], [5, 6, 2], [6, 7, 3], [7, 8, 4], [8, 1, 5]],
        h1_free_rank: 0,
        h1_torsion: &[15],
        generators: "st",
        relators: &["t s t^2 s^-1 t = s t^2 s t^2 t^s", "s t^-1 s^-1 t^-2 s = t s t^2 t^s s t"],
    },
    Preset {
        name: "V0_1",
        faces: [[1, 2, 3], [1, 4, 5], [1, 6, 4], [2, 6, 8], [2, 8, 5], [3, 6, 7], [3, 7, 5], [4, 8, 7]],
        h1_free_rank: 2,
        h1_torsion: &[3],
        generators: "uvw",
        relators: &["u = v w^-1 v^-1 u w", "u v = w v w u w", "u v u w = w u v u"],
    },
    Preset {
        name: "V0_2",
        faces: [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 8, 5], [3, 6, 8], [3, 7, 5], [4, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[3, 3, 3],
        generators: "uvw",
        relators: &["u v = w v w u w", "w u = u v w v^2", "v = u v w^-1 u w u"],
    },
    Preset {
        name: "V0_2c",
        faces: [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 6, 4], [2, 8, 5], [3, 6, 8], [3, 7, 5], [4, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[3, 3, 3],
        generators: "uvw",
        relators: &["u v = w v w u w", "w u = v u v w v", "w u^2 v = v u^-1 w"],
    },
    Preset {
        name: "V1",
        faces: [[1, 1, 2], [1, 3, 4], [2, 5, 6], [2, 7, 8], [3, 5, 7], [3, 6, 5], [4, 6, 8], [4, 8, 7]],
        h1_free_rank: 1,
        h1_torsion: &[3],
        generators: "st",
        relators: &["s^4 t s^-3 t s = t s^2 t", "t = s^2 t s^-1 t^-1 s^2 t^-1 s^-2 t^2 s^2"],
    },
    Preset {
        name: "V2_1",
        faces: [[1, 1, 3], [2, 2, 3], [1, 4, 5], [2, 7, 8], [3, 5, 7], [4, 6, 8], [4, 7, 6], [5, 8, 6]],
        h1_free_rank: 0,
        h1_torsion: &[24],
        generators: "st",
        relators: &["s t^2 = t s t^2 s^-1 t s^2", "t s^-1 t^2 = s^3 t s^2 t^-2 s t^-1 s t s^2"],
    },
    Preset {
        name: "V2_2",
        faces: [[1, 1, 3], [2, 2, 4], [3, 7, 4], [1, 4, 6], [2, 5, 3], [5, 7, 8], [5, 8, 6], [6, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[3, 3],
        generators: "st",
        relators: &["s^2 = t^2 s^4 t^-3 s t", "s t = t^2 s^-2 t^-4 s^3"],
    },
    Preset {
        name: "V2_3",
        faces: [[1, 1, 3], [2, 2, 4], [1, 5, 2], [3, 6, 4], [3, 7, 6], [4, 6, 8], [5, 7, 8], [5, 8, 7]],
        h1_free_rank: 1,
        h1_torsion: &[3],
        generators: "st",
        relators: &["s^2 t^3 s^3 t^2 = t^2 s^2", "t^2 = s^2 t^2 s^2 t^2 s^-2 t s"],
    },
    Preset {
        name: "V2_4",
        faces: [[1, 1, 3], [2, 2, 4], [1, 5, 2], [3, 6, 5], [3, 7, 8], [4, 5, 8], [4, 6, 7], [6, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[24],
        generators: "st",
        relators: &["s^2 t^2 s t s^2 = t^3 s t", "s = t^3 s t s t^-1 s^2 t s t"],
    },
    Preset {
        name: "V3",
        faces: [[1, 1, 4], [2, 2, 4], [3, 3, 5], [1, 3, 6], [2, 5, 7], [4, 7, 8], [5, 8, 6], [6, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[6],
        generators: "st",
        relators: &["s t^3 s t = t^2 s t s^2", "s^2 = t^2 s t s^-2 t s^-1 t^2 s t^3"],
    },
    Preset {
        name: "V4_1",
        faces: [[1, 1, 5], [2, 2, 5], [3, 3, 6], [4, 4, 6], [1, 3, 8], [2, 7, 4], [5, 8, 7], [6, 7, 8]],
        h1_free_rank: 0,
        h1_torsion: &[2, 2, 12],
        generators: "uvw",
        relators: &["v^2 = u^2", "w^2 u w = u w u^2", "w^2 v u w v u^3 w u^2 = e"],
    },
    Preset {
        name: "V4_2",
        faces: [[1, 1, 5], [2, 2, 5], [3, 3, 6], [4, 4, 7], [1, 3, 8], [2, 7, 6], [4, 8, 6], [5, 8, 7]],
        h1_free_rank: 0,
        h1_torsion: &[66],
        generators: "st",
        relators: &["t^2 s t^3 s t s t s^2 = e", "t^2 s^-2 t^-1 s^-1 t^2 = s^3 t s^2"],
    },
    Preset {
        name: "Vbar",
        faces: [[3, -1, 2], [3, -2, 4], [2, 6, -3], [5, -1, -6], [7, -4, 5], [8, -6, 7], [5, 8, 7], [1, 4, -8]],
        h1_free_rank: 1,
        h1_torsion: &[],
        generators: "st",
        relators: &[
            "s^2 t = t^2 s^2 t^2 s^-1 t^-1 s t^-1 s",
            "t = s t s^-1 t s^-1 t^2 s^-1 t^-2 s t^-1 s",
        ],
    },
];

/// The twelve orientable presets, in publication order.
pub fn orientable_presets() -> impl Iterator<Item = &'static Preset> {
    PRESETS.iter().filter(|p| p.name != "Vbar")
}

pub fn preset(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name.eq_ignore_ascii_case(name))
}
