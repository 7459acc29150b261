//! Numerical semigroups: cofinite submonoids of the non-negative integers.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use crate::bits::Bits;
use crate::error::{Error, Result};

/// A numerical semigroup `H = <a_1, ..., a_l>`.
///
/// The record is immutable after construction. Membership below the
/// conductor is stored as a bit window; everything at or above the conductor
/// is a member. Apéry lists are cached lazily per modulus.
pub struct NumericalSemigroup {
    gens: Vec<i64>,
    frobenius: i64,
    /// Membership over `[0, conductor)`.
    members: Bits,
    gaps: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
    apery: Mutex<BTreeMap<i64, Arc<[i64]>>>,
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// Builds the semigroup spanned by `gens` and reduces the list to the
    /// minimal generating set.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NotCofinite { gcd: g });
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let m = sorted[0] as usize;

        // Sieve until `m` consecutive members appear; every larger integer is
        // then a member. Terminates because the gcd is 1.
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut z = 0usize;
        loop {
            let is_member = z == 0
                || sorted
                    .iter()
                    .any(|&g| g as usize <= z && member[z - g as usize]);
            member.push(is_member);
            run = if is_member { run + 1 } else { 0 };
            if run == m {
                break;
            }
            z += 1;
        }
        let conductor = member.iter().rposition(|&b| !b).map_or(0, |i| i + 1);
        let mut bits = Bits::zeros(conductor);
        for (i, _) in member[..conductor].iter().enumerate().filter(|(_, &b)| b) {
            bits.set(i);
        }
        Ok(Self::from_member_window(bits))
    }

    /// The whole monoid of non-negative integers (the DVR case).
    pub fn naturals() -> Self {
        Self::from_member_window(Bits::zeros(0))
    }

    /// Builds a semigroup from a finite gap set, checking that the complement
    /// is closed under addition.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        if let Some(&g) = gaps.iter().find(|&&g| g <= 0) {
            return Err(Error::Parse(format!("gap {g} must be positive")));
        }
        let conductor = gaps.iter().copied().max().map_or(0, |f| f + 1) as usize;
        let mut bits = Bits::zeros(conductor);
        for i in (0..conductor).filter(|&i| !gaps.contains(&(i as i64))) {
            bits.set(i);
        }
        for x in bits.iter_ones() {
            for y in bits.iter_ones() {
                let s = x + y;
                if s < conductor && !bits.get(s) {
                    return Err(Error::Parse(format!(
                        "complement of gap set is not closed: {x} + {y} = {s}"
                    )));
                }
            }
        }
        Ok(Self::from_member_window(bits))
    }

    /// `members` covers `[0, conductor)`; bit 0 must be set unless the window
    /// is empty, and the last bit must be clear.
    pub(crate) fn from_member_window(members: Bits) -> Self {
        let c = members.len();
        debug_assert!(c == 0 || (members.get(0) && !members.get(c - 1)));
        let is_member = |z: usize| z >= c || members.get(z);
        let multiplicity = (1..).find(|&z| is_member(z)).unwrap();

        // Minimal generators are members that are not a sum of two nonzero
        // members; all of them lie below conductor + multiplicity.
        let mut gens = Vec::new();
        for x in 1..(c + multiplicity).max(multiplicity + 1) {
            if !is_member(x) {
                continue;
            }
            let decomposable = (multiplicity..=x / 2).any(|h| is_member(h) && is_member(x - h));
            if !decomposable {
                gens.push(x as i64);
            }
        }
        let gaps: Vec<i64> = (0..c).filter(|&z| !members.get(z)).map(|z| z as i64).collect();
        let pseudo_frobenius = if c == 0 {
            vec![-1]
        } else {
            gaps.iter()
                .copied()
                .filter(|&n| gens.iter().all(|&g| is_member((n + g) as usize)))
                .collect()
        };
        NumericalSemigroup {
            gens,
            frobenius: c as i64 - 1,
            members,
            gaps,
            pseudo_frobenius,
            apery: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.gens
    }

    /// Largest integer outside `H`; `-1` for `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least integer `c` with `[c, ∞) ⊆ H`.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        z >= self.conductor() || self.members.get(z as usize)
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    pub fn multiplicity(&self) -> i64 {
        self.gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    /// `PF(H)`, sorted; `[-1]` for `H = N`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen–Macaulay type of the semigroup ring, `|PF(H)|`.
    pub fn type_(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// Sorted Apéry list of `H` with respect to a nonzero member `e`.
    pub fn apery_set(&self, e: i64) -> Result<Arc<[i64]>> {
        if e <= 0 || !self.contains(e) {
            return Err(Error::NotAMember { value: e });
        }
        let mut cache = self.apery.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(list) = cache.get(&e) {
            return Ok(Arc::clone(list));
        }
        let mut least = vec![None; e as usize];
        let mut found = 0;
        let mut z = 0i64;
        while found < e {
            if self.contains(z) {
                let slot = &mut least[(z % e) as usize];
                if slot.is_none() {
                    *slot = Some(z);
                    found += 1;
                }
            }
            z += 1;
        }
        let mut list: Vec<i64> = least.into_iter().map(Option::unwrap).collect();
        list.sort_unstable();
        let list: Arc<[i64]> = list.into();
        cache.insert(e, Arc::clone(&list));
        Ok(list)
    }

    /// Exactly one of `z`, `f - z` lies in `H` for every integer `z`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// `M + M = e + M` for `M = H \ {0}` and `e` the multiplicity.
    pub fn has_minimal_multiplicity(&self) -> bool {
        let e = self.multiplicity();
        let top = self.conductor() + 2 * e;
        let in_m = |z: i64| z > 0 && self.contains(z);
        (0..=top).all(|z| {
            let in_sum = (e..=z - e).any(|h| in_m(h) && in_m(z - h));
            in_sum == in_m(z - e)
        })
    }

    /// Child of this node in the genus tree: `H \ {g}` for a minimal
    /// generator `g > f(H)`.
    pub(crate) fn remove_generator(&self, g: i64) -> Self {
        debug_assert!(g > self.frobenius && self.gens.contains(&g));
        let c = g as usize + 1;
        let old = self.members.slice(0, c, true);
        let mut bits = Bits::zeros(c);
        for i in old.iter_ones().filter(|&i| i != g as usize) {
            bits.set(i);
        }
        Self::from_member_window(bits)
    }

    /// Canonical one-line form, e.g. `⟨3,7,8⟩ f=5 g=4 t=2`.
    pub fn summary(&self) -> String {
        format!(
            "{} f={} g={} t={}",
            self,
            self.frobenius,
            self.genus(),
            self.type_()
        )
    }
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        let cache = self.apery.lock().unwrap_or_else(|p| p.into_inner()).clone();
        NumericalSemigroup {
            gens: self.gens.clone(),
            frobenius: self.frobenius,
            members: self.members.clone(),
            gaps: self.gaps.clone(),
            pseudo_frobenius: self.pseudo_frobenius.clone(),
            apery: Mutex::new(cache),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<S: Hasher>(&self, state: &mut S) {
        self.gens.hash(state);
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup({})", self.summary())
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("⟩")
    }
}

/// Parses a comma-separated generator list such as `3,7,8`.
pub fn parse_generators(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("'{tok}' is not an integer")))
        })
        .collect()
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_generators(&parse_generators(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn three_seven_eight() {
        let s = h(&[3, 7, 8]);
        assert_eq!(s.minimal_generators(), &[3, 7, 8]);
        assert_eq!(s.frobenius(), 5);
        assert_eq!(s.gaps(), &[1, 2, 4, 5]);
        assert_eq!(s.pseudo_frobenius(), &[4, 5]);
        assert_eq!((s.type_(), s.multiplicity(), s.embedding_dimension(), s.genus()), (2, 3, 3, 4));
        assert!(!s.contains(5));
        assert!(s.contains(0));
        assert!(s.contains(10));
        assert!(!s.contains(-3));
        assert_eq!(&*s.apery_set(3).unwrap(), &[0, 7, 8]);
        assert!(!s.is_symmetric());
        assert!(s.has_minimal_multiplicity());
        assert_eq!(s.summary(), "⟨3,7,8⟩ f=5 g=4 t=2");
    }

    #[test]
    fn redundant_generators_are_dropped() {
        assert_eq!(h(&[3, 6, 7, 8]).minimal_generators(), &[3, 7, 8]);
        assert_eq!(h(&[8, 3, 7, 3]).minimal_generators(), &[3, 7, 8]);
    }

    #[test]
    fn naturals() {
        let n = h(&[1]);
        assert!(n.is_naturals());
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
        assert_eq!(n.pseudo_frobenius(), &[-1]);
        assert_eq!((n.type_(), n.multiplicity(), n.embedding_dimension(), n.genus()), (1, 1, 1, 0));
        assert!(n.is_symmetric());
        assert_eq!(&*n.apery_set(1).unwrap(), &[0]);
        assert_eq!(n, NumericalSemigroup::naturals());
        assert_eq!(h(&[1, 5]).minimal_generators(), &[1]);
    }

    #[test]
    fn small_examples() {
        assert_eq!(&*h(&[2, 3]).apery_set(3).unwrap(), &[0, 2, 4]);
        assert_eq!(h(&[2, 3]).pseudo_frobenius(), &[1]);
        assert!(h(&[2, 3]).is_symmetric());
        assert_eq!(h(&[3, 4, 5]).pseudo_frobenius(), &[1, 2]);
        assert_eq!(h(&[5, 7, 9, 13]).type_(), 2);
        assert!(!h(&[5, 7, 9, 13]).has_minimal_multiplicity());
        assert!(h(&[4, 9, 11, 14]).has_minimal_multiplicity());
    }

    #[test]
    fn sieve_handles_non_coprime_smallest_pair() {
        // gcd(4, 6) = 2, so the two smallest generators give no bound.
        let s = h(&[4, 6, 7]);
        assert_eq!(s.minimal_generators(), &[4, 6, 7]);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 9]);
    }

    #[test]
    fn errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyGenerators));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NotCofinite { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[3, 0]),
            Err(Error::NonPositiveGenerator(0))
        );
        assert_eq!(h(&[3, 7, 8]).apery_set(5).unwrap_err(), Error::NotAMember { value: 5 });
        assert_eq!(h(&[3, 7, 8]).apery_set(0).unwrap_err(), Error::NotAMember { value: 0 });
        assert!("3, x".parse::<NumericalSemigroup>().is_err());
        assert_eq!("3,7,8".parse::<NumericalSemigroup>().unwrap(), h(&[3, 7, 8]));
    }

    #[test]
    fn gap_constructor_and_tree_children() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 5]).unwrap();
        assert_eq!(s, h(&[3, 7, 8]));
        assert!(NumericalSemigroup::from_gaps(&[1, 3, 4]).is_err());
        let child = h(&[3, 7, 8]).remove_generator(7);
        assert_eq!(child.gaps(), &[1, 2, 4, 5, 7]);
        assert_eq!(child.minimal_generators(), &[3, 8, 10]);
    }
}
