//! Enumeration of numerical semigroups by genus and of three-generated
//! semigroups by Frobenius number.

use std::sync::Arc;

use rayon::prelude::*;

use crate::semigroup::{gcd, NumericalSemigroup};

/// Children of `h` in the genus tree: `h \ {g}` for minimal generators
/// `g > f(h)`.
pub fn genus_tree_children(h: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    h.minimal_generators()
        .iter()
        .filter(|&&g| g > h.frobenius())
        .map(|&g| h.remove_generator(g))
        .collect()
}

/// Yields every numerical semigroup of genus `<= g_max` once, by genus and
/// then by lexicographic gap set. Each level is built in parallel from the
/// previous one.
#[derive(Debug)]
pub struct GenusEnumeration {
    g_max: usize,
    genus: usize,
    level: std::vec::IntoIter<Arc<NumericalSemigroup>>,
    next_parents: Vec<Arc<NumericalSemigroup>>,
}

impl GenusEnumeration {
    fn advance_level(&mut self) -> bool {
        if self.genus >= self.g_max {
            return false;
        }
        let parents = std::mem::take(&mut self.next_parents);
        let mut children: Vec<Arc<NumericalSemigroup>> = parents
            .par_iter()
            .flat_map_iter(|p| genus_tree_children(p).into_iter().map(Arc::new))
            .collect();
        children.par_sort_unstable_by(|a, b| a.gaps().cmp(b.gaps()));
        self.genus += 1;
        self.next_parents = children.clone();
        self.level = children.into_iter();
        true
    }
}

impl Iterator for GenusEnumeration {
    type Item = Arc<NumericalSemigroup>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(h) = self.level.next() {
                return Some(h);
            }
            if !self.advance_level() {
                return None;
            }
        }
    }
}

pub fn enumerate_by_genus(g_max: usize) -> GenusEnumeration {
    let root = Arc::new(NumericalSemigroup::naturals());
    GenusEnumeration {
        g_max,
        genus: 0,
        level: vec![Arc::clone(&root)].into_iter(),
        next_parents: vec![root],
    }
}

/// `[n_0, ..., n_g_max]` where `n_g` is the number of semigroups of genus `g`.
pub fn counts_by_genus(g_max: usize) -> Vec<usize> {
    let mut counts = vec![0; g_max + 1];
    for h in enumerate_by_genus(g_max) {
        counts[h.genus()] += 1;
    }
    counts
}

/// Least members of `⟨gens⟩` in each residue class modulo `gens[0]`
/// (`None` when a class is never reached), by the round-robin method.
fn residue_minima(gens: &[i64]) -> Vec<Option<i64>> {
    let m = gens[0];
    let mut dist = vec![None; m as usize];
    dist[0] = Some(0);
    for &g in &gens[1..] {
        let d = gcd(m, g);
        let step = (g % m) as usize;
        let cycle_len = (m / d) as usize;
        for start in 0..d as usize {
            // Start the cycle walk at its current minimum so one lap suffices.
            let mut best = start;
            let mut r = start;
            for _ in 0..cycle_len {
                if let Some(v) = dist[r] {
                    if dist[best].is_none_or(|b| v < b) {
                        best = r;
                    }
                }
                r = (r + step) % m as usize;
            }
            if dist[best].is_none() {
                continue;
            }
            let mut r = best;
            for _ in 0..cycle_len {
                let next = (r + step) % m as usize;
                if let Some(v) = dist[r] {
                    let cand = v + g;
                    if dist[next].is_none_or(|w| cand < w) {
                        dist[next] = Some(cand);
                    }
                }
                r = next;
            }
        }
    }
    dist
}

/// Frobenius number of `⟨a, b, c⟩` if the triple is a minimal generating
/// set of a numerical semigroup.
fn minimal_triple_frobenius(a: i64, b: i64, c: i64) -> Option<i64> {
    if b % a == 0 {
        return None;
    }
    let ab = residue_minima(&[a, b]);
    if ab[(c % a) as usize].is_some_and(|w| w <= c) {
        return None;
    }
    if gcd(gcd(a, b), c) != 1 {
        return None;
    }
    let abc = residue_minima(&[a, b, c]);
    abc.iter().map(|w| w.expect("gcd is 1")).max().map(|w| w - a)
}

/// All semigroups with exactly three minimal generators and Frobenius
/// number `<= f_max`, ordered by generator list. With `non_symmetric_only`
/// the symmetric ones (complete intersections) are dropped.
pub fn enumerate_three_generated(f_max: i64, non_symmetric_only: bool) -> Vec<Arc<NumericalSemigroup>> {
    // The multiplicity is at most f + 1 and every minimal generator is at
    // most f + multiplicity.
    (2..=f_max + 1)
        .into_par_iter()
        .flat_map_iter(|a| {
            let top = f_max + a;
            (a + 1..=top).flat_map(move |b| {
                (b + 1..=top).filter_map(move |c| {
                    let f = minimal_triple_frobenius(a, b, c)?;
                    (f <= f_max).then_some([a, b, c])
                })
            })
        })
        .filter_map(|gens| {
            let h = NumericalSemigroup::from_generators(&gens).expect("valid triple");
            debug_assert_eq!(h.minimal_generators(), &gens);
            (!non_symmetric_only || !h.is_symmetric()).then(|| Arc::new(h))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_genus_counts() {
        assert_eq!(counts_by_genus(0), vec![1]);
        assert_eq!(counts_by_genus(3), vec![1, 1, 2, 4]);
        let all: Vec<_> = enumerate_by_genus(2).map(|h| h.to_string()).collect();
        assert_eq!(all, ["⟨1⟩", "⟨2,3⟩", "⟨3,4,5⟩", "⟨2,5⟩"]);
    }

    #[test]
    fn triple_frobenius() {
        assert_eq!(minimal_triple_frobenius(3, 7, 8), Some(5));
        assert_eq!(minimal_triple_frobenius(3, 6, 7), None);
        assert_eq!(minimal_triple_frobenius(3, 4, 8), None);
        assert_eq!(minimal_triple_frobenius(4, 6, 8), None);
        assert_eq!(minimal_triple_frobenius(4, 6, 7), Some(9));
    }

    #[test]
    fn three_generated_small() {
        let all = enumerate_three_generated(9, false);
        let names: Vec<String> = all.iter().map(|h| h.to_string()).collect();
        assert!(names.contains(&"⟨3,7,8⟩".to_string()));
        assert!(names.contains(&"⟨3,4,5⟩".to_string()));
        assert!(all.iter().all(|h| h.frobenius() <= 9 && h.embedding_dimension() == 3));
        let non_sym = enumerate_three_generated(9, true);
        assert!(all.iter().any(|h| h.to_string() == "⟨4,5,6⟩"));
        assert!(non_sym.len() < all.len());
        assert!(non_sym.iter().all(|h| !h.is_symmetric()));
    }
}
