//! Determinantal presentation of non-symmetric three-generated semigroups.
//!
//! For `H = ⟨a1, a2, a3⟩` non-symmetric, the defining ideal of `k[[H]]` is the
//! ideal of 2×2 minors of
//!
//! ```text
//! X^α   Y^β   Z^γ
//! Y^β'  Z^γ'  X^α'
//! ```
//!
//! where `c_i a_i` (the least multiple of `a_i` in the semigroup spanned by the
//! other two generators) decomposes uniquely with positive coefficients.
//! Everything here is numeric; no polynomial arithmetic is involved.

use std::fmt;
use std::sync::Arc;

use crate::classify::{classify, Classification};
use crate::error::{inconsistent, Error, Result};
use crate::ideal::canonical_ideal;
use crate::semigroup::NumericalSemigroup;
use crate::RelativeIdeal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HerzogData {
    /// `(a1, a2, a3)` in matrix order.
    pub ordered_gens: [i64; 3],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
    /// `d1 = a3(γ+γ')`, `d2 = a1(α+α')`, `d3 = a2(β+β')`: degrees of the minors.
    pub d: [i64; 3],
    /// Degrees of the two syzygies.
    pub m_deg: i64,
    pub n_deg: i64,
    /// `a1 + a2 + a3`.
    pub d_sum: i64,
    /// `n_deg - m_deg`; `K = R + R t^a_gap`.
    pub a_gap: i64,
}

impl HerzogData {
    pub fn exponents(&self) -> [i64; 6] {
        [
            self.alpha,
            self.beta,
            self.gamma,
            self.alpha_p,
            self.beta_p,
            self.gamma_p,
        ]
    }

    /// `{m_deg - d, n_deg - d}`, ascending.
    pub fn pseudo_frobenius(&self) -> [i64; 2] {
        let (x, y) = (self.m_deg - self.d_sum, self.n_deg - self.d_sum);
        [x.min(y), x.max(y)]
    }

    /// The three relations `c_i a_i = ...` between the generators.
    pub fn relations_hold(&self) -> bool {
        let [a1, a2, a3] = self.ordered_gens;
        (self.alpha + self.alpha_p) * a1 == self.beta_p * a2 + self.gamma * a3
            && (self.beta + self.beta_p) * a2 == self.alpha * a1 + self.gamma_p * a3
            && (self.gamma + self.gamma_p) * a3 == self.alpha_p * a1 + self.beta * a2
    }

    /// All three expressions of each syzygy degree agree with `m_deg`, `n_deg`
    /// and the minors have degrees `d`.
    pub fn degrees_hold(&self) -> bool {
        let [a1, a2, a3] = self.ordered_gens;
        let [d1, d2, d3] = self.d;
        d1 == a3 * (self.gamma + self.gamma_p)
            && d2 == a1 * (self.alpha + self.alpha_p)
            && d3 == a2 * (self.beta + self.beta_p)
            && [a1 * self.alpha + d1, a2 * self.beta + d2, a3 * self.gamma + d3]
                .iter()
                .all(|&x| x == self.m_deg)
            && [a1 * self.alpha_p + d3, a2 * self.beta_p + d1, a3 * self.gamma_p + d2]
                .iter()
                .all(|&x| x == self.n_deg)
    }

    /// `n - m = a2β' - a1α = a3γ' - a2β = a1α' - a3γ`.
    pub fn equations_e_hold(&self) -> bool {
        let [a1, a2, a3] = self.ordered_gens;
        let gap = self.n_deg - self.m_deg;
        gap == a2 * self.beta_p - a1 * self.alpha
            && gap == a3 * self.gamma_p - a2 * self.beta
            && gap == a1 * self.alpha_p - a3 * self.gamma
    }

    /// `αβγ`, which equals `ℓ(K/R)`.
    pub fn kr_length(&self) -> i64 {
        self.alpha * self.beta * self.gamma
    }

    /// Top row `X^2 Y Z`.
    pub fn is_two_one_one(&self) -> bool {
        (self.alpha, self.beta, self.gamma) == (2, 1, 1)
    }

    /// Generator formulas forced by the `(2,1,1)` top row:
    /// `a1 = β'γ' + β' + 1`, `a2 = 2γ' + α'γ' + 2`, `a3 = α'β' + α' + 2`.
    pub fn normal_form_identities_hold(&self) -> bool {
        let [a1, a2, a3] = self.ordered_gens;
        let (ap, bp, gp) = (self.alpha_p, self.beta_p, self.gamma_p);
        a1 == bp * gp + bp + 1 && a2 == 2 * gp + ap * gp + 2 && a3 == ap * bp + ap + 2
    }
}

impl fmt::Display for HerzogData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn mono(var: &str, e: i64) -> String {
            if e == 1 {
                var.to_string()
            } else {
                format!("{var}^{e}")
            }
        }
        write!(
            f,
            "I2[{} {} {} / {} {} {}]",
            mono("X", self.alpha),
            mono("Y", self.beta),
            mono("Z", self.gamma),
            mono("Y", self.beta_p),
            mono("Z", self.gamma_p),
            mono("X", self.alpha_p),
        )
    }
}

/// Least `k > 0` with `k x ∈ ⟨p, q⟩`, together with all decompositions
/// `k x = λ p + μ q` (λ, μ ≥ 0).
fn minimal_multiple(x: i64, p: i64, q: i64) -> (i64, Vec<(i64, i64)>) {
    let mut k = 1;
    loop {
        let target = k * x;
        let decomps: Vec<(i64, i64)> = (0..=target / p)
            .filter_map(|lam| {
                let rest = target - lam * p;
                (rest % q == 0).then_some((lam, rest / q))
            })
            .collect();
        if !decomps.is_empty() {
            return (k, decomps);
        }
        k += 1;
    }
}

/// Unique positive decomposition of the least multiple of `x` in `⟨p, q⟩`.
fn positive_decomposition(x: i64, p: i64, q: i64) -> Result<(i64, i64, i64)> {
    let (k, decomps) = minimal_multiple(x, p, q);
    match decomps.as_slice() {
        [(lam, mu)] if *lam >= 1 && *mu >= 1 => Ok((k, *lam, *mu)),
        // A zero coefficient means `k x` is a multiple of a single generator,
        // which only happens for complete intersections.
        [_] => Err(Error::Symmetric),
        many => Err(Error::NonUniqueDecomposition {
            multiple: k * x,
            count: many.len(),
        }),
    }
}

/// Exponent data for a fixed ordering of the three generators, with no
/// normalization of `m` versus `n`.
pub fn herzog_data_for_order(order: [i64; 3]) -> Result<HerzogData> {
    let [a1, a2, a3] = order;
    // c1 a1 = β' a2 + γ a3, c2 a2 = α a1 + γ' a3, c3 a3 = α' a1 + β a2.
    let (c1, beta_p, gamma) = positive_decomposition(a1, a2, a3)?;
    let (c2, alpha, gamma_p) = positive_decomposition(a2, a1, a3)?;
    let (c3, alpha_p, beta) = positive_decomposition(a3, a1, a2)?;
    if c1 != alpha + alpha_p || c2 != beta + beta_p || c3 != gamma + gamma_p {
        return Err(inconsistent(
            "Herzog exponents",
            format!("minimal multiples ({c1},{c2},{c3}) do not split along the matrix rows"),
        ));
    }
    let d = [a3 * c3, a1 * c1, a2 * c2];
    let m_deg = a1 * alpha + d[0];
    let n_deg = a1 * alpha_p + d[2];
    let data = HerzogData {
        ordered_gens: order,
        alpha,
        beta,
        gamma,
        alpha_p,
        beta_p,
        gamma_p,
        d,
        m_deg,
        n_deg,
        d_sum: a1 + a2 + a3,
        a_gap: n_deg - m_deg,
    };
    if !data.relations_hold() || !data.degrees_hold() || !data.equations_e_hold() {
        return Err(inconsistent(
            "Herzog identities",
            format!("identities fail for order {order:?}: {data:?}"),
        ));
    }
    Ok(data)
}

fn three_generators(h: &NumericalSemigroup) -> Result<[i64; 3]> {
    match *h.minimal_generators() {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(Error::NotThreeGenerated),
    }
}

/// The six orderings of `[x, y, z]`, lexicographic when the input is sorted.
fn permutations([x, y, z]: [i64; 3]) -> [[i64; 3]; 6] {
    [
        [x, y, z],
        [x, z, y],
        [y, x, z],
        [y, z, x],
        [z, x, y],
        [z, y, x],
    ]
}

/// Herzog data with `m_deg < n_deg`, checked against the pseudo-Frobenius
/// set of `h`.
pub fn herzog_matrix(h: &NumericalSemigroup) -> Result<HerzogData> {
    let gens = three_generators(h)?;
    if h.is_symmetric() {
        return Err(Error::Symmetric);
    }
    let [a1, a2, a3] = gens;
    let mut data = herzog_data_for_order(gens)?;
    if data.m_deg > data.n_deg {
        data = herzog_data_for_order([a1, a3, a2])?;
    }
    if data.m_deg >= data.n_deg {
        return Err(inconsistent(
            "Herzog normalization",
            format!("swapping a2, a3 did not give m < n: {data:?}"),
        ));
    }
    if data.pseudo_frobenius()[..] != *h.pseudo_frobenius() {
        return Err(inconsistent(
            "Herzog degrees",
            format!(
                "degrees give PF {:?}, direct PF is {:?}",
                data.pseudo_frobenius(),
                h.pseudo_frobenius()
            ),
        ));
    }
    Ok(data)
}

/// `ℓ(K/R)` from the canonical ideal, for comparison with `αβγ`.
pub fn direct_kr_length(h: &Arc<NumericalSemigroup>) -> Result<usize> {
    canonical_ideal(h)?.length_quotient(&RelativeIdeal::ring(h))
}

/// Verdict of the matrix criterion for three-generated semigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixVerdict {
    pub two_agl: bool,
    /// `2a + a1` with `a = n - m`, present when `two_agl`.
    pub predicted_frobenius: Option<i64>,
    /// The ordering with top row `X^2 Y Z` and `m < n`, if any.
    pub normal_form: Option<HerzogData>,
}

/// Looks for an ordering whose matrix has top row `X^2 Y Z` with `m < n`;
/// the ring is 2-AGL exactly when such an ordering exists with `α' ≥ 2`.
/// The verdict is checked against the direct classification and `f`.
pub fn is_two_agl_via_74(h: &Arc<NumericalSemigroup>) -> Result<MatrixVerdict> {
    let gens = three_generators(h)?;
    if h.is_symmetric() {
        return Err(Error::Symmetric);
    }
    let mut normal_form = None;
    for order in permutations(gens) {
        let data = herzog_data_for_order(order)?;
        if data.is_two_one_one() && data.m_deg < data.n_deg {
            normal_form = Some(data);
            break;
        }
    }
    let verdict = match normal_form {
        Some(data) if data.alpha_p >= 2 => MatrixVerdict {
            two_agl: true,
            predicted_frobenius: Some(2 * data.a_gap + data.ordered_gens[0]),
            normal_form,
        },
        _ => MatrixVerdict {
            two_agl: false,
            predicted_frobenius: None,
            normal_form,
        },
    };
    let direct = classify(h)? == Classification::TwoAgl;
    if verdict.two_agl != direct {
        return Err(inconsistent(
            "matrix 2-AGL criterion",
            format!("{h}: matrix says {}, direct says {direct}", verdict.two_agl),
        ));
    }
    if let Some(f) = verdict.predicted_frobenius {
        if f != h.frobenius() {
            return Err(inconsistent(
                "matrix Frobenius prediction",
                format!("{h}: predicted {f}, actual {}", h.frobenius()),
            ));
        }
    }
    Ok(verdict)
}

/// Parametric 2-AGL families of multiplicity 3 and 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cor77Family {
    /// `⟨3, c+3, 2c⟩`, `c ≥ 4`, `c ≢ 0 (mod 3)`.
    Mult3,
    /// `⟨5, 3c+8, 2c+2⟩`, `c ≥ 2`, `c ≢ 4 (mod 5)`.
    Mult5First,
    /// `⟨5, c+4, 3c+2⟩`, `c ≥ 2`, `c ≢ 1 (mod 5)`.
    Mult5Second,
}

impl Cor77Family {
    pub const ALL: [Cor77Family; 3] = [
        Cor77Family::Mult3,
        Cor77Family::Mult5First,
        Cor77Family::Mult5Second,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Cor77Family::Mult3 => "⟨3,c+3,2c⟩",
            Cor77Family::Mult5First => "⟨5,3c+8,2c+2⟩",
            Cor77Family::Mult5Second => "⟨5,c+4,3c+2⟩",
        }
    }

    pub fn multiplicity(self) -> i64 {
        match self {
            Cor77Family::Mult3 => 3,
            _ => 5,
        }
    }

    /// Generators for parameter `c`, or `None` outside the admissible range.
    pub fn generators(self, c: i64) -> Option<[i64; 3]> {
        match self {
            Cor77Family::Mult3 => (c >= 4 && c % 3 != 0).then_some([3, c + 3, 2 * c]),
            Cor77Family::Mult5First => (c >= 2 && c % 5 != 4).then_some([5, 3 * c + 8, 2 * c + 2]),
            Cor77Family::Mult5Second => (c >= 2 && c % 5 != 1).then_some([5, c + 4, 3 * c + 2]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cor77Match {
    pub family: Cor77Family,
    pub c: i64,
}

/// Matches `h` against the multiplicity-3 and multiplicity-5 families.
pub fn corollary77_classify(h: &NumericalSemigroup) -> Option<Cor77Match> {
    let gens = three_generators(h).ok()?;
    let largest = gens[2];
    Cor77Family::ALL
        .into_iter()
        .filter(|fam| fam.multiplicity() == gens[0])
        .find_map(|family| {
            (0..=largest).find_map(|c| {
                let mut g = family.generators(c)?;
                g.sort_unstable();
                (g == gens).then_some(Cor77Match { family, c })
            })
        })
}

/// The type-2 criterion `3a ∈ H and f = 2a + a_i`, where `PF = {f - a, f}`.
/// `None` when `h` has fewer than three generators or type other than 2.
pub fn theorem72_test(h: &NumericalSemigroup) -> Option<bool> {
    if h.embedding_dimension() < 3 || h.type_() != 2 {
        return None;
    }
    let f = h.frobenius();
    let a = f - h.pseudo_frobenius()[0];
    Some(
        h.contains(3 * a)
            && h
                .minimal_generators()
                .iter()
                .any(|&ai| f == 2 * a + ai),
    )
}
