//! Free semigroup probe: do products of the given words reach pairwise
//! distinct vertices?

use std::collections::HashSet;

use crate::cover::{CoverError, WordTracer};

/// Number of distinct endpoints among all products of `1..=max_len`
/// factors from `words`, and the number of products.
pub fn product_endpoints<T: WordTracer>(t: &mut T, words: &[Vec<i8>], max_len: usize) -> Result<(usize, usize), CoverError> {
    let mut ends = Vec::new();
    let mut layer: Vec<Vec<i8>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * words.len());
        for prefix in &layer {
            for w in words {
                let mut x = prefix.clone();
                x.extend_from_slice(w);
                ends.push(t.endpoint(&x)?.ok_or(CoverError::OutOfBall)?);
                next.push(x);
            }
        }
        layer = next;
    }
    let total = ends.len();
    // Later steps may identify earlier endpoints, so resolve at the end.
    let distinct: HashSet<u64> = ends.into_iter().map(|e| t.resolve(e)).collect();
    Ok((distinct.len(), total))
}

/// True iff all products of `1..=max_len` factors end at pairwise distinct
/// vertices. Products are compared as factor sequences, so a repeated word
/// already gives `false`.
pub fn free_semigroup_probe<T: WordTracer>(t: &mut T, words: &[Vec<i8>], max_len: usize) -> Result<bool, CoverError> {
    let (distinct, total) = product_endpoints(t, words, max_len)?;
    Ok(distinct == total)
}
