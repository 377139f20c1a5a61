//! Compact syntax for group words and relations.
//!
//! A word is a sequence of factors such as `s`, `t^2`, `s^-1`, `S` (inverse,
//! as is `s'`) or `t^s` (conjugate `s^-1 t s`). Whitespace is optional. A
//! relation `w1 = w2` stands for the relator `w1 w2^-1`; a side consisting
//! of `e` or `1` alone is the identity.

use super::HomologyError;

/// A syllable: generator index and exponent.
pub type Syllable = (usize, i64);
pub type Word = Vec<Syllable>;

pub fn invert(w: &Word) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Parses a relation over generators named by the characters of `names`.
pub fn parse_relator(text: &str, names: &[char]) -> Result<Word, HomologyError> {
    let mut sides = text.split('=');
    let lhs = sides.next().unwrap_or("");
    let rhs = sides.next();
    if sides.next().is_some() {
        return Err(HomologyError::Parse(format!("more than one `=` in `{text}`")));
    }
    let mut w = parse_side(lhs, names)?;
    if let Some(r) = rhs {
        w.extend(invert(&parse_side(r, names)?));
    }
    Ok(w)
}

fn parse_side(text: &str, names: &[char]) -> Result<Word, HomologyError> {
    let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(HomologyError::Parse("empty side of a relation".into()));
    }
    if compact == ['e'] && !names.contains(&'e') || compact == ['1'] {
        return Ok(Vec::new());
    }
    let gen = |c: char| -> Result<(usize, i64), HomologyError> {
        let lower = c.to_ascii_lowercase();
        let idx = names
            .iter()
            .position(|&n| n == lower)
            .ok_or_else(|| HomologyError::Parse(format!("unknown generator `{c}`")))?;
        Ok((idx, if c.is_ascii_uppercase() { -1 } else { 1 }))
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < compact.len() {
        let c = compact[i];
        if !c.is_ascii_alphabetic() {
            return Err(HomologyError::Parse(format!("unexpected `{c}` in `{text}`")));
        }
        let (g, mut sign) = gen(c)?;
        i += 1;
        if i < compact.len() && compact[i] == '\'' {
            sign = -sign;
            i += 1;
        }
        if i < compact.len() && compact[i] == '^' {
            i += 1;
            let start = i;
            if i < compact.len() && compact[i] == '-' {
                i += 1;
            }
            while i < compact.len() && compact[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = compact[start..i].iter().collect();
            if digits.is_empty() || digits == "-" {
                // Conjugation by a single generator: x^y = y^-1 x y.
                let Some(&y) = compact.get(i) else {
                    return Err(HomologyError::Parse(format!("dangling `^` in `{text}`")));
                };
                if !digits.is_empty() {
                    return Err(HomologyError::Parse(format!("bad exponent in `{text}`")));
                }
                let (h, hs) = gen(y)?;
                i += 1;
                out.push((h, -hs));
                out.push((g, sign));
                out.push((h, hs));
                continue;
            }
            let e: i64 = digits
                .parse()
                .map_err(|_| HomologyError::Parse(format!("bad exponent `{digits}`")))?;
            out.push((g, sign * e));
        } else {
            out.push((g, sign));
        }
    }
    Ok(out)
}

/// Generator names for a set of relations: the distinct letters used, in
/// alphabetical order. The identity token `e` is not a generator unless it
/// is used inside a longer word.
pub fn generator_names(relators: &[&str]) -> Vec<char> {
    let mut names: Vec<char> = Vec::new();
    for r in relators {
        for side in r.split('=') {
            let trimmed: String = side.chars().filter(|c| !c.is_whitespace()).collect();
            if trimmed == "e" || trimmed == "1" {
                continue;
            }
            for c in trimmed.chars().filter(char::is_ascii_alphabetic) {
                names.push(c.to_ascii_lowercase());
            }
        }
    }
    names.sort_unstable();
    names.dedup();
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_and_inverses() {
        let n = ['s', 't'];
        assert_eq!(parse_relator("s t^2 S", &n).unwrap(), vec![(0, 1), (1, 2), (0, -1)]);
        assert_eq!(parse_relator("s^-3t'", &n).unwrap(), vec![(0, -3), (1, -1)]);
    }

    #[test]
    fn conjugation_token() {
        assert_eq!(parse_relator("t^s", &['s', 't']).unwrap(), vec![(0, -1), (1, 1), (0, 1)]);
    }

    #[test]
    fn relation_becomes_relator() {
        let w = parse_relator("s t = t s", &['s', 't']).unwrap();
        assert_eq!(w, vec![(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert_eq!(parse_relator("s^2 = e", &['s']).unwrap(), vec![(0, 2)]);
    }

    #[test]
    fn errors() {
        assert!(parse_relator("s x", &['s']).is_err());
        assert!(parse_relator("s = t = s", &['s', 't']).is_err());
        assert!(parse_relator("s^", &['s']).is_err());
    }

    #[test]
    fn names_are_sorted_and_skip_identity() {
        assert_eq!(generator_names(&["w^2 v u = e", "u = v"]), vec!['u', 'v', 'w']);
    }
}
