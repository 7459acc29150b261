//! Independent brute-force oracles on plain integer windows, compared with
//! the library over every semigroup of small genus.

use std::sync::Arc;

use twoagl::classify::{Classification, InvariantDossier};
use twoagl::corpus::enumerate_by_genus;
use twoagl::{NumericalSemigroup, RelativeIdeal};

/// A subset of `[lo, hi)` that contains every integer `>= hi`.
#[derive(Clone, PartialEq, Debug)]
struct Window {
    lo: i64,
    hi: i64,
    bits: Vec<bool>,
}

impl Window {
    fn new(lo: i64, hi: i64, pred: impl Fn(i64) -> bool) -> Self {
        Window { lo, hi, bits: (lo..hi).map(pred).collect() }
    }

    fn has(&self, z: i64) -> bool {
        if z >= self.hi {
            true
        } else if z < self.lo {
            false
        } else {
            self.bits[(z - self.lo) as usize]
        }
    }

    fn members(&self) -> Vec<i64> {
        (self.lo..self.hi).filter(|&z| self.has(z)).collect()
    }

    fn sum(&self, other: &Window) -> Window {
        let (a, b) = (self.members(), other.members());
        let hi = self.hi.min(other.hi);
        Window::new(self.lo.min(other.lo), hi, |z| {
            a.iter().any(|&x| other.has(z - x)) || b.iter().any(|&y| self.has(z - y))
        })
    }

    /// `{z : z + other ⊆ self}`, searched on `[lo, hi)`.
    fn colon(&self, other: &Window, lo: i64) -> Window {
        let b = other.members();
        let hi = self.hi;
        Window::new(lo, hi, |z| b.iter().all(|&y| self.has(z + y)) && (other.hi..hi).all(|y| self.has(z + y)))
    }

    fn count_outside(&self, inner: &Window) -> usize {
        (self.lo.min(inner.lo)..self.hi.max(inner.hi))
            .filter(|&z| self.has(z) && !inner.has(z))
            .count()
    }
}

struct Naive {
    h: Window,
    f: i64,
    gaps: Vec<i64>,
    pf: Vec<i64>,
}

fn naive(gens: &[i64], bound: i64) -> Naive {
    let mut member = vec![false; bound as usize];
    member[0] = true;
    for z in 1..bound {
        member[z as usize] = gens.iter().any(|&g| g <= z && member[(z - g) as usize]);
    }
    let gaps: Vec<i64> = (0..bound).filter(|&z| !member[z as usize]).collect();
    let f = gaps.last().copied().unwrap_or(-1);
    let h = Window::new(0, f + 1, |z| member[z as usize]);
    let pf = gaps
        .iter()
        .copied()
        .filter(|&x| (1..=f + 1).all(|s| !h.has(s) || h.has(x + s)))
        .collect();
    Naive { h, f, gaps, pf }
}

fn window_of(e: &RelativeIdeal, hi: i64) -> Window {
    Window::new(e.min().min(0), hi, |z| e.contains(z))
}

fn check_semigroup(h: &Arc<NumericalSemigroup>) {
    let gens = h.minimal_generators();
    let n = naive(gens, 4 * h.conductor() + 4 * gens[gens.len() - 1] + 8);
    assert_eq!(h.frobenius(), n.f, "{h}");
    assert_eq!(h.gaps(), &n.gaps[..], "{h}");
    if h.is_naturals() {
        // Type 1 by convention.
        assert_eq!(h.pseudo_frobenius(), &[-1]);
        return;
    }
    assert_eq!(h.pseudo_frobenius(), &n.pf[..], "{h}");
    let d = InvariantDossier::compute(h).unwrap();
    let hi = 40 * (n.f + 1) + 16;

    // K = ∪ (f - c + H) over c in PF.
    let k = Window::new(0, hi, |z| n.pf.iter().any(|&c| n.h.has(z - (n.f - c))));
    assert_eq!(window_of(d.canonical_k(), hi), k, "K of {h}");

    let mut s = k.clone();
    loop {
        let next = s.sum(&k);
        if next == s {
            break;
        }
        s = next;
    }
    assert_eq!(window_of(d.blowup_s(), hi), s, "S of {h}");

    let ring = Window::new(0, hi, |z| n.h.has(z));
    let c = ring.colon(&s, 0);
    assert_eq!(window_of(d.conductor_c(), hi), c, "c of {h}");

    let rank = s.count_outside(&k);
    assert_eq!(ring.count_outside(&c), rank, "ℓ(R/c) of {h}");
    assert_eq!(d.sally_rank, rank, "rank of {h}");
    let expected_class = match rank {
        0 => Classification::Gorenstein,
        1 => Classification::Agl,
        2 => Classification::TwoAgl,
        r => Classification::Rank(r),
    };
    assert_eq!(d.classification, expected_class, "{h}");
    assert_eq!(d.len_k_mod_r, k.count_outside(&ring), "ℓ(K/R) of {h}");

    // ℓ(R/I^(n+1)) with I = a + K.
    let a = d.chosen_a();
    let mut k_pow = k.clone();
    for n_idx in 0..d.hilbert_values.len() {
        let i_pow = Window::new(0, hi, |z| k_pow.has(z - (n_idx as i64 + 1) * a));
        assert_eq!(d.hilbert_values[n_idx], ring.count_outside(&i_pow), "{h} n={n_idx}");
        k_pow = k_pow.sum(&k);
    }

    // B = M : M.
    let m = Window::new(1, hi, |z| n.h.has(z));
    let b = m.colon(&m, 0);
    let b_sg = d.b_semigroup.as_ref().unwrap();
    for z in 0..hi {
        assert_eq!(b_sg.contains(z), b.has(z), "B of {h} at {z}");
    }
}

#[test]
fn library_matches_brute_force_through_genus_nine() {
    let mut seen = 0;
    for h in enumerate_by_genus(9) {
        check_semigroup(&h);
        seen += 1;
    }
    assert_eq!(seen, 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118);
}

#[test]
fn brute_force_on_hand_picked_semigroups() {
    for gens in [
        vec![3, 7, 8],
        vec![5, 7, 9, 13],
        vec![4, 9, 11, 14],
        vec![4, 7, 9, 10],
        vec![6, 13, 14, 15, 16],
        vec![7, 9, 10, 11, 12],
        vec![5, 11, 12, 13],
    ] {
        let h = Arc::new(NumericalSemigroup::from_generators(&gens).unwrap());
        check_semigroup(&h);
    }
}

#[test]
fn genus_counts_match_known_sequence() {
    let counts = twoagl::corpus::counts_by_genus(14);
    assert_eq!(
        counts,
        [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693]
    );
}
