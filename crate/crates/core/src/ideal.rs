//! Relative ideals of a numerical semigroup.
//!
//! A relative ideal is a bounded-below set `E ⊂ Z` with `E + H ⊆ E`. These
//! are exactly the exponent sets of monomial fractional ideals of `k[[H]]`:
//! products of ideals become sumsets, colons become set colons, and the
//! length of a quotient of monomial modules is the number of exponents in
//! the set difference.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{inconsistent, Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A relative ideal in normal form: `min` is a member, every integer
/// `>= stable_from` is a member, and `stable_from` is as small as possible.
#[derive(Clone)]
pub struct RelativeIdeal {
    host: Arc<NumericalSemigroup>,
    min: i64,
    stable_from: i64,
    /// Membership over `[min, stable_from)`.
    window: Bits,
}

/// Serialized form: `{"min":0,"stable_from":6,"members":[0,1,3,4]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub min: i64,
    pub stable_from: i64,
    pub members: Vec<i64>,
}

impl RelativeIdeal {
    /// Normalizes a membership window over `[lo, lo + bits.len())`, with every
    /// integer past the window a member.
    fn normalize(host: Arc<NumericalSemigroup>, lo: i64, bits: Bits) -> Self {
        let len = bits.len();
        let Some(first) = bits.first_one() else {
            let min = lo + len as i64;
            return RelativeIdeal {
                host,
                min,
                stable_from: min,
                window: Bits::zeros(0),
            };
        };
        let end = match bits.last_zero() {
            Some(z) if z > first => z + 1,
            _ => first,
        };
        RelativeIdeal {
            host,
            min: lo + first as i64,
            stable_from: lo + end as i64,
            window: bits.slice(first, end - first, true),
        }
    }

    /// Membership bits of `self` over `[start, start + len)`.
    fn bits_from(&self, start: i64, len: usize) -> Bits {
        let mut out = Bits::zeros(len);
        for i in 0..len {
            if self.contains(start + i as i64) {
                out.set(i);
            }
        }
        out
    }

    fn from_predicate(
        host: Arc<NumericalSemigroup>,
        lo: i64,
        hi: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        let len = (hi - lo).max(0) as usize;
        let mut bits = Bits::zeros(len);
        for i in 0..len {
            if pred(lo + i as i64) {
                bits.set(i);
            }
        }
        Self::normalize(host, lo, bits)
    }

    /// `∪ (x + H)` over the given offsets.
    pub fn from_offsets(host: &Arc<NumericalSemigroup>, offsets: &[i64]) -> Result<Self> {
        let lo = *offsets.iter().min().ok_or(Error::EmptyOffsets)?;
        let hi = offsets.iter().map(|&x| x + host.conductor()).max().unwrap();
        Ok(Self::from_predicate(Arc::clone(host), lo, hi, |z| {
            offsets.iter().any(|&x| host.contains(z - x))
        }))
    }

    /// Builds an ideal from explicit members below `stable_from`, checking
    /// closure under the host's generators.
    pub fn from_members(
        host: &Arc<NumericalSemigroup>,
        members: &[i64],
        stable_from: i64,
    ) -> Result<Self> {
        let lo = members.iter().copied().min().unwrap_or(stable_from).min(stable_from);
        let e = Self::from_predicate(Arc::clone(host), lo, stable_from, |z| members.contains(&z));
        for x in e.window_members() {
            for &g in host.minimal_generators() {
                if !e.contains(x + g) {
                    return Err(Error::NotAnIdeal(format!("{x} + {g} is missing")));
                }
            }
        }
        Ok(e)
    }

    /// `H` itself, the unit ideal.
    pub fn ring(host: &Arc<NumericalSemigroup>) -> Self {
        Self::from_offsets(host, &[0]).unwrap()
    }

    /// `M = H \ {0}`.
    pub fn maximal(host: &Arc<NumericalSemigroup>) -> Self {
        Self::from_offsets(host, host.minimal_generators()).unwrap()
    }

    /// `N`, the exponent set of the integral closure.
    pub fn naturals(host: &Arc<NumericalSemigroup>) -> Self {
        Self::from_predicate(Arc::clone(host), 0, 0, |_| true)
    }

    pub fn host(&self) -> &Arc<NumericalSemigroup> {
        &self.host
    }

    pub fn min(&self) -> i64 {
        self.min
    }

    pub fn stable_from(&self) -> i64 {
        self.stable_from
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.stable_from {
            true
        } else {
            self.window.get((z - self.min) as usize)
        }
    }

    /// Members strictly below `stable_from`.
    pub fn window_members(&self) -> Vec<i64> {
        self.window.iter_ones().map(|i| self.min + i as i64).collect()
    }

    fn check_host(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.host, &other.host) || self.host == other.host {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    /// `E + F = {x + y}`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        // E + F is stable from min(E) + stable_from(F); iterate over the
        // shorter window.
        let (e, f) = if self.window.len() <= other.window.len() {
            (other, self)
        } else {
            (self, other)
        };
        let len = (f.stable_from - f.min) as usize;
        let e_bits = e.window.slice(0, len, true);
        let mut acc = Bits::zeros(len);
        for j in f.window.iter_ones() {
            acc.or_shifted(&e_bits, j);
        }
        Ok(Self::normalize(Arc::clone(&self.host), e.min + f.min, acc))
    }

    /// `n`-fold sumset; `power(0)` is the ring.
    pub fn power(&self, n: usize) -> Self {
        let mut acc = Self::ring(&self.host);
        for _ in 0..n {
            acc = acc.sum(self).expect("same host");
        }
        acc
    }

    /// `E : F = {z : z + F ⊆ E}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        let (e, f) = (self, other);
        // z + [stable_from(F), ∞) ⊆ E forces z >= stable_from(E) - stable_from(F);
        // z + min(F) ∈ E forces z >= min(E) - min(F); every z with
        // z + min(F) >= stable_from(E) qualifies.
        let lo = (e.min - f.min).max(e.stable_from - f.stable_from);
        let hi = e.stable_from - f.min;
        let f_members = f.window_members();
        let len = (hi - lo).max(0) as usize;
        let mut bits = Bits::ones(len);
        for &y in &f_members {
            let shifted = e.bits_from(lo + y, len);
            let mut next = Bits::zeros(len);
            for i in bits.iter_ones().filter(|&i| shifted.get(i)) {
                next.set(i);
            }
            bits = next;
        }
        Ok(Self::normalize(Arc::clone(&self.host), lo, bits))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        let lo = self.min.min(other.min);
        let hi = self.stable_from.max(other.stable_from);
        Ok(Self::from_predicate(Arc::clone(&self.host), lo, hi, |z| {
            self.contains(z) || other.contains(z)
        }))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        let lo = self.min.min(other.min);
        let hi = self.stable_from.max(other.stable_from);
        Ok(Self::from_predicate(Arc::clone(&self.host), lo, hi, |z| {
            self.contains(z) && other.contains(z)
        }))
    }

    /// `k + E`.
    pub fn shift(&self, k: i64) -> Self {
        RelativeIdeal {
            host: Arc::clone(&self.host),
            min: self.min + k,
            stable_from: self.stable_from + k,
            window: self.window.clone(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        if self.min < other.min {
            return false;
        }
        let hi = self.stable_from.max(other.stable_from);
        (self.min..hi).all(|z| !self.contains(z) || other.contains(z))
    }

    /// Members of `self` outside `other`, in increasing order.
    pub fn difference(&self, other: &Self) -> Vec<i64> {
        let hi = self.stable_from.max(other.stable_from);
        (self.min..hi).filter(|&z| self.contains(z) && !other.contains(z)).collect()
    }

    /// `ℓ(E/F) = |E \ F|` for `F ⊆ E`.
    pub fn length_quotient(&self, sub: &Self) -> Result<usize> {
        self.check_host(sub)?;
        if !sub.is_subset(self) {
            return Err(Error::NotContained);
        }
        Ok(self.difference(sub).len())
    }

    /// `E \ (M + E)`; its size is the minimal number of generators of the
    /// corresponding monomial module.
    pub fn minimal_module_generators(&self) -> Vec<i64> {
        let m_plus = Self::maximal(&self.host).sum(self).expect("same host");
        self.difference(&m_plus)
    }

    /// Least `n` with `K^n = K^(n+1)` together with the stable power
    /// `S = K^n`. Requires `0 ∈ K ⊆ N`, which makes the powers increase.
    pub fn stabilize(&self) -> Result<(Self, usize)> {
        if self.min != 0 {
            return Err(Error::Precondition("stabilize needs 0 ∈ K ⊆ N"));
        }
        let mut current = Self::ring(&self.host);
        let mut next = self.clone();
        let mut n = 0;
        while current != next {
            current = next;
            next = current.sum(self)?;
            n += 1;
        }
        Ok((current, n))
    }

    /// Reinterprets a relative ideal that is itself a submonoid of `N`
    /// (such as the blowup or `M : M`) as a numerical semigroup.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup> {
        if self.min != 0 || self.sum(self)? != *self {
            return Err(Error::Precondition("set is not a submonoid of N containing 0"));
        }
        Ok(NumericalSemigroup::from_member_window(
            self.window.slice(0, self.stable_from as usize, true),
        ))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            min: self.min,
            stable_from: self.stable_from,
            members: self.window_members(),
        }
    }

    pub fn from_json(host: &Arc<NumericalSemigroup>, json: &IdealJson) -> Result<Self> {
        let e = Self::from_members(host, &json.members, json.stable_from)?;
        if e.to_json() != *json {
            return Err(Error::Parse("ideal JSON is not in normal form".into()));
        }
        Ok(e)
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.min == other.min
            && self.stable_from == other.stable_from
            && self.window == other.window
            && (Arc::ptr_eq(&self.host, &other.host) || self.host == other.host)
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members = self.window_members();
        if !members.is_empty() {
            f.write_str("{")?;
            for (i, m) in members.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{m}")?;
            }
            f.write_str("}∪")?;
        }
        write!(f, "[{},∞)", self.stable_from)
    }
}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({} over {})", self, self.host)
    }
}

/// `{f - c : c ∈ PF(H)} + H`.
pub fn canonical_from_pseudo_frobenius(host: &Arc<NumericalSemigroup>) -> RelativeIdeal {
    let f = host.frobenius();
    let offsets: Vec<i64> = host.pseudo_frobenius().iter().map(|&c| f - c).collect();
    RelativeIdeal::from_offsets(host, &offsets).expect("PF is never empty")
}

/// `{z : f - z ∉ H}`.
pub fn canonical_from_gap_duality(host: &Arc<NumericalSemigroup>) -> RelativeIdeal {
    let f = host.frobenius();
    RelativeIdeal::from_predicate(Arc::clone(host), 0, f + 1, |z| !host.contains(f - z))
}

/// The fractional canonical ideal `K` with `H ⊆ K ⊆ N`, built from the
/// pseudo-Frobenius offsets and checked against the gap-dual description.
pub fn canonical_ideal(host: &Arc<NumericalSemigroup>) -> Result<RelativeIdeal> {
    let k = canonical_from_pseudo_frobenius(host);
    let dual = canonical_from_gap_duality(host);
    if k != dual {
        return Err(inconsistent(
            "canonical ideal",
            format!("PF construction {k} differs from gap dual {dual}"),
        ));
    }
    Ok(k)
}
