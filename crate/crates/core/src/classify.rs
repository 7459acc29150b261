//! Invariants of the semigroup ring `R = k[[H]]` attached to its canonical
//! ideal, and the resulting classification.
//!
//! Notation follows the usual one-dimensional setting: `K` is the fractional
//! canonical ideal with `H ⊆ K ⊆ N`, `I = a + K` is a canonical ideal of `R`
//! with reduction `Q = (t^a)`, `S = K^n` for large `n` is the blowup and
//! `c = H : S` is the conductor. All of these are [`RelativeIdeal`]s over `H`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{inconsistent, Error, Result};
use crate::ideal::{canonical_ideal, RelativeIdeal};
use crate::semigroup::NumericalSemigroup;

/// Number of graded pieces / Hilbert values evaluated by default.
pub const DEFAULT_HORIZON: usize = 6;

/// Ordered by the rank of the Sally module of the canonical ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    /// `H = N`; the ring is a discrete valuation ring.
    Dvr,
    Gorenstein,
    Agl,
    TwoAgl,
    /// Sally rank `k >= 3`.
    Rank(usize),
}

impl Classification {
    pub fn from_rank(rank: usize) -> Self {
        match rank {
            0 => Classification::Gorenstein,
            1 => Classification::Agl,
            2 => Classification::TwoAgl,
            k => Classification::Rank(k),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Classification::Dvr | Classification::Gorenstein => 0,
            Classification::Agl => 1,
            Classification::TwoAgl => 2,
            Classification::Rank(k) => k,
        }
    }

    pub fn is_gorenstein(self) -> bool {
        self.rank() == 0
    }

    /// Gorenstein rings count as AGL.
    pub fn is_agl(self) -> bool {
        self.rank() <= 1
    }

    pub fn label(self) -> String {
        match self {
            Classification::Dvr => "DVR".into(),
            Classification::Gorenstein => "Gorenstein".into(),
            Classification::Agl => "AGL".into(),
            Classification::TwoAgl => "2-AGL".into(),
            Classification::Rank(k) => format!("rank-{k}"),
        }
    }

    pub fn parse_label(label: &str) -> Result<Self> {
        Ok(match label {
            "DVR" => Classification::Dvr,
            "Gorenstein" => Classification::Gorenstein,
            "AGL" => Classification::Agl,
            "2-AGL" => Classification::TwoAgl,
            other => {
                let k = other
                    .strip_prefix("rank-")
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 3)
                    .ok_or_else(|| Error::Parse(format!("unknown class '{other}'")))?;
                Classification::Rank(k)
            }
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for Classification {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let label = String::deserialize(d)?;
        Classification::parse_label(&label).map_err(serde::de::Error::custom)
    }
}

/// `K/R ≅ (R/c)^free ⊕ (R/m)^socle` for a 2-AGL ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrDecomposition {
    #[serde(rename = "free")]
    pub free_rank: usize,
    #[serde(rename = "socle")]
    pub socle_count: usize,
}

/// Predicted invariants of the idealization `R ⋉ c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealizationPreview {
    #[serde(rename = "v")]
    pub embedding_dimension: usize,
    #[serde(rename = "e")]
    pub multiplicity: i64,
    pub rank: usize,
}

/// The reduction parameter used by default: the conductor `c(H)`, or the
/// multiplicity when `K = H`.
pub fn choose_canonical_parameter(h: &NumericalSemigroup) -> Result<i64> {
    if h.is_naturals() {
        return Err(Error::Dvr);
    }
    Ok(if h.is_symmetric() {
        h.multiplicity()
    } else {
        h.conductor()
    })
}

/// Canonical ideal, reduction parameter and the ideals derived from them.
#[derive(Debug, Clone)]
pub struct CanonicalSetup {
    pub host: Arc<NumericalSemigroup>,
    pub ring: RelativeIdeal,
    pub maximal: RelativeIdeal,
    pub k: RelativeIdeal,
    /// Exponent `a` of the reduction `Q = (t^a)`.
    pub a: i64,
    /// `I = a + K`.
    pub i: RelativeIdeal,
    /// `S = R[K]`.
    pub s: RelativeIdeal,
    /// `r_Q(I)`: least `n` with `K^n = K^(n+1)`.
    pub reduction_number: usize,
    /// `c = H : S`.
    pub conductor: RelativeIdeal,
}

impl CanonicalSetup {
    pub fn new(host: &Arc<NumericalSemigroup>) -> Result<Self> {
        Self::with_parameter(host, choose_canonical_parameter(host)?)
    }

    /// Uses `I = a + K`; requires `a > 0` and `a + K ⊆ H`.
    pub fn with_parameter(host: &Arc<NumericalSemigroup>, a: i64) -> Result<Self> {
        let k = canonical_ideal(host)?;
        let ring = RelativeIdeal::ring(host);
        if a <= 0 {
            return Err(Error::InvalidParameter {
                a,
                reason: "must be positive".into(),
            });
        }
        let i = k.shift(a);
        if !i.is_subset(&ring) {
            return Err(Error::InvalidParameter {
                a,
                reason: "a + K is not contained in H".into(),
            });
        }
        let (s, reduction_number) = k.stabilize()?;
        let conductor = ring.colon(&s)?;
        Ok(CanonicalSetup {
            host: Arc::clone(host),
            maximal: RelativeIdeal::maximal(host),
            ring,
            k,
            a,
            i,
            s,
            reduction_number,
            conductor,
        })
    }

    pub fn k_power(&self, n: usize) -> RelativeIdeal {
        self.k.power(n)
    }

    /// `I^n` as an `n`-fold sumset of `I`.
    pub fn i_power(&self, n: usize) -> RelativeIdeal {
        self.i.power(n)
    }

    /// `ℓ(R/I^(n+1)) = |H \ I^(n+1)|`.
    pub fn hilbert_function(&self, n: usize) -> usize {
        self.ring
            .length_quotient(&self.i_power(n + 1))
            .expect("I^(n+1) ⊆ H")
    }

    /// `ℓ(I^(n+1) / Q^n I)`, the length of the degree-`n` piece of the Sally
    /// module.
    pub fn sally_graded_length(&self, n: usize) -> usize {
        let qn_i = self.i.shift(n as i64 * self.a);
        self.i_power(n + 1)
            .length_quotient(&qn_i)
            .expect("Q^n I ⊆ I^(n+1)")
    }

    /// `(e0, e1)`. `e1` is read off the stable Hilbert line and checked
    /// against `ℓ(S/R)`.
    pub fn hilbert_coefficients(&self) -> Result<(i64, i64)> {
        let e0 = self.a;
        let n0 = self.reduction_number;
        let v: Vec<i64> = (n0..n0 + 3).map(|n| self.hilbert_function(n) as i64).collect();
        if v[1] - v[0] != e0 || v[2] - v[1] != e0 {
            return Err(inconsistent(
                "Hilbert function",
                format!("values {v:?} past n = {n0} do not grow by e0 = {e0}"),
            ));
        }
        let e1 = e0 * (n0 as i64 + 1) - v[0];
        let via_blowup = self.s.length_quotient(&self.ring)? as i64;
        if e1 != via_blowup {
            return Err(inconsistent(
                "e1",
                format!("Hilbert line gives {e1}, ℓ(S/R) gives {via_blowup}"),
            ));
        }
        Ok((e0, e1))
    }

    /// `ℓ(R/I)`.
    pub fn len_r_mod_i(&self) -> usize {
        self.ring.length_quotient(&self.i).expect("I ⊆ H")
    }

    /// The three routes to the Sally rank: `ℓ(S/K)`, `ℓ(R/c)` and
    /// `e1 - (e0 - ℓ(R/I))`.
    pub fn rank_routes(&self) -> Result<[i64; 3]> {
        let via_blowup = self.s.length_quotient(&self.k)? as i64;
        let via_conductor = self.ring.length_quotient(&self.conductor)? as i64;
        let (e0, e1) = self.hilbert_coefficients()?;
        let via_hilbert = e1 - (e0 - self.len_r_mod_i() as i64);
        Ok([via_blowup, via_conductor, via_hilbert])
    }

    pub fn sally_rank(&self) -> Result<usize> {
        let routes = self.rank_routes()?;
        if routes[1] != routes[0] || routes[2] != routes[0] {
            return Err(inconsistent("Sally rank", format!("routes disagree: {routes:?}")));
        }
        Ok(routes[0] as usize)
    }

    /// `M + K ⊆ H`, checked against `M + K^2 ⊆ K`.
    pub fn is_agl(&self) -> Result<bool> {
        let direct = self.maximal.sum(&self.k)?.is_subset(&self.ring);
        let via_square = self.maximal.sum(&self.k_power(2))?.is_subset(&self.k);
        if direct != via_square {
            return Err(inconsistent(
                "AGL test",
                format!("M+K ⊆ H is {direct} but M+K² ⊆ K is {via_square}"),
            ));
        }
        Ok(direct)
    }

    /// `K : M`.
    pub fn k_colon_m(&self) -> RelativeIdeal {
        self.k.colon(&self.maximal).expect("same host")
    }

    /// The seven equivalent characterizations of the 2-AGL property,
    /// each evaluated on its own.
    pub fn theorem14_conditions(&self, horizon: usize) -> Result<[bool; 7]> {
        let k2 = self.k_power(2);
        let k3 = self.k_power(3);
        let i2 = self.i_power(2);
        let i3 = self.i_power(3);
        let qi = self.i.shift(self.a);
        let gorenstein = self.k == self.ring;

        let rank_is_two = self.sally_rank()? == 2;

        let graded_all_two = (1..=horizon).all(|n| self.sally_graded_length(n) == 2);
        let m_i2_plus_qi = self.maximal.sum(&i2)?.union(&qi)?;
        let non_split = i2.length_quotient(&m_i2_plus_qi)? == 1;

        let k_stable = k2 == k3 && k2.length_quotient(&self.k)? == 2;
        let i_stable = i3 == i2.shift(self.a) && i2.length_quotient(&qi)? == 2;
        let k_colon_m = !gorenstein
            && self
                .s
                .length_quotient(&self.k_colon_m())
                .is_ok_and(|l| l == 1);
        let s_over_k = self.s.length_quotient(&self.k)? == 2;
        let r_over_c = self.ring.length_quotient(&self.conductor)? == 2;

        Ok([
            rank_is_two,
            graded_all_two && non_split,
            k_stable,
            i_stable,
            k_colon_m,
            s_over_k,
            r_over_c,
        ])
    }

    /// `μ_R(K/R)`: exponents of `K` outside `(M + K) ∪ H`.
    pub fn kr_generator_count(&self) -> usize {
        let m_k = self.maximal.sum(&self.k).expect("same host");
        let covered = m_k.union(&self.ring).expect("same host");
        self.k.difference(&covered).len()
    }

    /// Decomposition of `K/R` over `R/c` for a 2-AGL ring, computed from
    /// `ℓ(K/R)` and the type, and checked against `ℓ(mK + R / R)` which
    /// counts the free summands directly.
    pub fn kr_decomposition(&self) -> Result<KrDecomposition> {
        if self.sally_rank()? != 2 {
            return Err(Error::NotTwoAgl);
        }
        let r = self.host.type_() as i64;
        let len_kr = self.k.length_quotient(&self.ring)? as i64;
        let free = len_kr - (r - 1);
        let socle = 2 * (r - 1) - len_kr;

        let m_k = self.maximal.sum(&self.k)?;
        let free_direct = m_k.difference(&self.ring).len() as i64;
        let socle_direct = self.kr_generator_count() as i64 - free_direct;
        if (free, socle) != (free_direct, socle_direct) {
            return Err(inconsistent(
                "K/R decomposition",
                format!(
                    "lengths give ({free}, {socle}), mK+R gives ({free_direct}, {socle_direct})"
                ),
            ));
        }
        if free < 1 || socle < 0 {
            return Err(inconsistent(
                "K/R decomposition",
                format!("impossible shape ({free}, {socle})"),
            ));
        }
        Ok(KrDecomposition {
            free_rank: free as usize,
            socle_count: socle as usize,
        })
    }

    /// Whether `K/R` is free over `R/c` (2-AGL only): the pseudo-Frobenius
    /// pairing criterion, checked against `ℓ(K/R) = 2(r - 1)`.
    pub fn freeness_test(&self) -> Result<bool> {
        if self.sally_rank()? != 2 {
            return Err(Error::NotTwoAgl);
        }
        let pf = self.host.pseudo_frobenius();
        let r = pf.len();
        let f = self.host.frobenius();
        let pairing = self.host.minimal_generators().iter().any(|&aj| {
            (1..r).all(|i| f + aj == pf[i - 1] + pf[r - i - 1])
        });
        let by_length = self.k.length_quotient(&self.ring)? == 2 * (r - 1);
        if pairing != by_length {
            return Err(inconsistent(
                "K/R freeness",
                format!("pairing criterion {pairing}, length criterion {by_length}"),
            ));
        }
        Ok(pairing)
    }

    /// `M : M` as a relative ideal of `H`.
    pub fn b_set(&self) -> RelativeIdeal {
        self.maximal.colon(&self.maximal).expect("same host")
    }
}

/// Rank-only classification; cheaper than a full dossier.
pub fn classify(h: &Arc<NumericalSemigroup>) -> Result<Classification> {
    if h.is_naturals() {
        return Ok(Classification::Dvr);
    }
    let k = canonical_ideal(h)?;
    let (s, _) = k.stabilize()?;
    Ok(Classification::from_rank(s.length_quotient(&k)?))
}

pub fn sally_rank(h: &Arc<NumericalSemigroup>) -> Result<usize> {
    CanonicalSetup::new(h)?.sally_rank()
}

pub fn hilbert_function(h: &Arc<NumericalSemigroup>, a: i64, n: usize) -> Result<usize> {
    Ok(CanonicalSetup::with_parameter(h, a)?.hilbert_function(n))
}

pub fn hilbert_coefficients(h: &Arc<NumericalSemigroup>, a: i64) -> Result<(i64, i64)> {
    CanonicalSetup::with_parameter(h, a)?.hilbert_coefficients()
}

pub fn sally_graded_length(h: &Arc<NumericalSemigroup>, a: i64, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Precondition("graded Sally pieces start at degree 1"));
    }
    Ok(CanonicalSetup::with_parameter(h, a)?.sally_graded_length(n))
}

pub fn theorem14_conditions(h: &Arc<NumericalSemigroup>) -> Result<[bool; 7]> {
    if h.is_naturals() {
        return Ok([false; 7]);
    }
    CanonicalSetup::new(h)?.theorem14_conditions(DEFAULT_HORIZON)
}

/// `M + K ⊆ H`.
pub fn agl_test(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    if h.is_naturals() {
        return Ok(true);
    }
    CanonicalSetup::new(h)?.is_agl()
}

pub fn kr_decomposition(h: &Arc<NumericalSemigroup>) -> Result<KrDecomposition> {
    if h.is_naturals() {
        return Err(Error::NotTwoAgl);
    }
    CanonicalSetup::new(h)?.kr_decomposition()
}

pub fn freeness_test(h: &Arc<NumericalSemigroup>) -> Result<bool> {
    if h.is_naturals() {
        return Err(Error::NotTwoAgl);
    }
    CanonicalSetup::new(h)?.freeness_test()
}

/// The semigroup of `B = m : m`, i.e. `{0} ∪ {z > 0 : z + M ⊆ M}`.
pub fn b_algebra(h: &Arc<NumericalSemigroup>) -> Result<NumericalSemigroup> {
    if h.is_naturals() {
        return Err(Error::Dvr);
    }
    let m = RelativeIdeal::maximal(h);
    m.colon(&m)?.to_semigroup()
}

pub fn idealization_preview(h: &Arc<NumericalSemigroup>) -> Result<IdealizationPreview> {
    if h.is_naturals() {
        return Err(Error::Dvr);
    }
    let setup = CanonicalSetup::new(h)?;
    Ok(IdealizationPreview {
        embedding_dimension: h.embedding_dimension()
            + setup.conductor.minimal_module_generators().len(),
        multiplicity: 2 * h.multiplicity(),
        rank: setup.sally_rank()?,
    })
}

/// Options for [`InvariantDossier::compute_with`].
#[derive(Debug, Clone, Copy)]
pub struct DossierOptions {
    /// Hilbert values are listed for `n = 0..=horizon` and graded Sally
    /// lengths for `n = 1..=horizon`.
    pub horizon: usize,
    /// Overrides the default reduction parameter.
    pub parameter: Option<i64>,
}

impl Default for DossierOptions {
    fn default() -> Self {
        DossierOptions {
            horizon: DEFAULT_HORIZON,
            parameter: None,
        }
    }
}

/// Every invariant the classification depends on, computed eagerly and
/// cross-checked.
#[derive(Debug, Clone)]
pub struct InvariantDossier {
    pub setup: CanonicalSetup,
    pub reduction_number: usize,
    pub sally_rank: usize,
    pub type_r: usize,
    pub classification: Classification,
    pub e0: i64,
    pub e1: i64,
    pub len_r_mod_i: usize,
    /// `ℓ(R/I^(n+1))` for `n = 0..=horizon`.
    pub hilbert_values: Vec<usize>,
    /// `ℓ(I^(n+1)/Q^n I)` for `n = 1..=horizon`.
    pub sally_lengths: Vec<usize>,
    pub len_k_mod_r: usize,
    pub len_k2_mod_k: usize,
    pub is_agl: bool,
    pub minimal_multiplicity: bool,
    pub decomposition: Option<KrDecomposition>,
    pub kr_free: bool,
    pub b_semigroup: Option<Arc<NumericalSemigroup>>,
    pub b_classification: Option<Classification>,
    pub theorem14: [bool; 7],
    pub idealization: Option<IdealizationPreview>,
}

impl InvariantDossier {
    pub fn compute(h: &Arc<NumericalSemigroup>) -> Result<Self> {
        Self::compute_with(h, DossierOptions::default())
    }

    pub fn compute_with(h: &Arc<NumericalSemigroup>, opts: DossierOptions) -> Result<Self> {
        let dvr = h.is_naturals();
        // For H = N the maximal ideal t·k[[t]] is itself canonical with
        // reduction (t).
        let a = match opts.parameter {
            Some(a) => a,
            None if dvr => 1,
            None => choose_canonical_parameter(h)?,
        };
        let setup = CanonicalSetup::with_parameter(h, a)?;
        let sally_rank = setup.sally_rank()?;
        let (e0, e1) = setup.hilbert_coefficients()?;

        let gorenstein_by_k = setup.k == setup.ring;
        if (sally_rank == 0) != gorenstein_by_k || gorenstein_by_k != h.is_symmetric() {
            return Err(inconsistent(
                "Gorenstein test",
                format!(
                    "rank {sally_rank}, K = H is {gorenstein_by_k}, symmetric is {}",
                    h.is_symmetric()
                ),
            ));
        }
        let classification = if dvr {
            Classification::Dvr
        } else {
            Classification::from_rank(sally_rank)
        };
        let is_agl = setup.is_agl()?;
        if is_agl != (sally_rank <= 1) {
            return Err(inconsistent(
                "AGL test",
                format!("M+K ⊆ H is {is_agl} at Sally rank {sally_rank}"),
            ));
        }

        let decomposition = if sally_rank == 2 {
            Some(setup.kr_decomposition()?)
        } else {
            None
        };
        let kr_free = match decomposition {
            Some(d) => {
                let free = setup.freeness_test()?;
                if free != (d.socle_count == 0) {
                    return Err(inconsistent(
                        "K/R freeness",
                        format!("freeness test {free} vs decomposition {d:?}"),
                    ));
                }
                free
            }
            None => false,
        };

        let (b_semigroup, b_classification, idealization) = if dvr {
            (None, None, None)
        } else {
            let b = Arc::new(b_algebra(h)?);
            let b_class = classify(&b)?;
            let preview = IdealizationPreview {
                embedding_dimension: h.embedding_dimension()
                    + setup.conductor.minimal_module_generators().len(),
                multiplicity: 2 * h.multiplicity(),
                rank: sally_rank,
            };
            (Some(b), Some(b_class), Some(preview))
        };

        let theorem14 = if dvr {
            [false; 7]
        } else {
            setup.theorem14_conditions(opts.horizon)?
        };

        Ok(InvariantDossier {
            reduction_number: setup.reduction_number,
            sally_rank,
            type_r: h.type_(),
            classification,
            e0,
            e1,
            len_r_mod_i: setup.len_r_mod_i(),
            hilbert_values: (0..=opts.horizon).map(|n| setup.hilbert_function(n)).collect(),
            sally_lengths: (1..=opts.horizon).map(|n| setup.sally_graded_length(n)).collect(),
            len_k_mod_r: setup.k.length_quotient(&setup.ring)?,
            len_k2_mod_k: setup.k_power(2).length_quotient(&setup.k)?,
            is_agl,
            minimal_multiplicity: h.has_minimal_multiplicity(),
            decomposition,
            kr_free,
            b_semigroup,
            b_classification,
            theorem14,
            idealization,
            setup,
        })
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.setup.host
    }

    pub fn canonical_k(&self) -> &RelativeIdeal {
        &self.setup.k
    }

    pub fn blowup_s(&self) -> &RelativeIdeal {
        &self.setup.s
    }

    pub fn conductor_c(&self) -> &RelativeIdeal {
        &self.setup.conductor
    }

    pub fn chosen_a(&self) -> i64 {
        self.setup.a
    }

    pub fn to_json(&self) -> DossierJson {
        let h = self.semigroup();
        DossierJson {
            gens: h.minimal_generators().to_vec(),
            f: h.frobenius(),
            type_: self.type_r,
            rank: self.sally_rank,
            class: self.classification,
            red: self.reduction_number,
            e0: self.e0,
            e1: self.e1,
            len_ri: self.len_r_mod_i,
            hilbert: self.hilbert_values.clone(),
            sally: self.sally_lengths.clone(),
            decomp: self.decomposition,
            kr_free: self.kr_free,
            b: self.b_semigroup.as_ref().map(|b| BJson {
                gens: b.minimal_generators().to_vec(),
                class: self.b_classification.expect("set with B"),
            }),
            idealization: self.idealization,
            thm14: self.theorem14,
        }
    }

    /// Multi-line human-readable report.
    pub fn render_text(&self) -> String {
        use std::fmt::Write;
        let h = self.semigroup();
        let mut out = String::new();
        let class = match self.classification {
            Classification::Dvr => "Gorenstein (DVR)".to_string(),
            Classification::Gorenstein => "Gorenstein (symmetric)".to_string(),
            c => c.label(),
        };
        let _ = writeln!(out, "{}", h.summary());
        let _ = writeln!(out, "class: {class}  [Sally rank {}]", self.sally_rank);
        let _ = writeln!(out, "PF: {:?}", h.pseudo_frobenius());
        let _ = writeln!(out, "K = {}", self.canonical_k());
        let _ = writeln!(out, "S = {}", self.blowup_s());
        let _ = writeln!(out, "c = {}", self.conductor_c());
        let _ = writeln!(
            out,
            "a = {}  red = {}  e0 = {}  e1 = {}  ℓ(R/I) = {}",
            self.chosen_a(),
            self.reduction_number,
            self.e0,
            self.e1,
            self.len_r_mod_i
        );
        let _ = writeln!(out, "ℓ(R/I^(n+1)), n ≥ 0: {:?}", self.hilbert_values);
        let _ = writeln!(out, "ℓ(I^(n+1)/Q^n I), n ≥ 1: {:?}", self.sally_lengths);
        let _ = writeln!(
            out,
            "ℓ(K/R) = {}  ℓ(K²/K) = {}  minimal multiplicity: {}",
            self.len_k_mod_r, self.len_k2_mod_k, self.minimal_multiplicity
        );
        if let Some(d) = self.decomposition {
            let _ = writeln!(
                out,
                "K/R ≅ (R/c)^{} ⊕ (R/m)^{}  free: {}",
                d.free_rank, d.socle_count, self.kr_free
            );
        }
        if let (Some(b), Some(bc)) = (&self.b_semigroup, self.b_classification) {
            let _ = writeln!(out, "B = m:m = {b}  class: {bc}");
        }
        if let Some(p) = self.idealization {
            let _ = writeln!(
                out,
                "R ⋉ c: v = {}  e = {}  rank = {}",
                p.embedding_dimension, p.multiplicity, p.rank
            );
        }
        let _ = writeln!(out, "2-AGL conditions: {:?}", self.theorem14);
        out
    }
}

/// JSON form of a dossier; field order is part of the output format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DossierJson {
    pub gens: Vec<i64>,
    pub f: i64,
    #[serde(rename = "type")]
    pub type_: usize,
    pub rank: usize,
    pub class: Classification,
    pub red: usize,
    pub e0: i64,
    pub e1: i64,
    #[serde(rename = "lenRI")]
    pub len_ri: usize,
    pub hilbert: Vec<usize>,
    pub sally: Vec<usize>,
    pub decomp: Option<KrDecomposition>,
    pub kr_free: bool,
    #[serde(rename = "B")]
    pub b: Option<BJson>,
    pub idealization: Option<IdealizationPreview>,
    pub thm14: [bool; 7],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BJson {
    pub gens: Vec<i64>,
    pub class: Classification,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[i64]) -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
    }

    #[test]
    fn parameter_choice() {
        assert_eq!(choose_canonical_parameter(&h(&[3, 7, 8])).unwrap(), 6);
        assert_eq!(choose_canonical_parameter(&h(&[2, 3])).unwrap(), 2);
        assert_eq!(choose_canonical_parameter(&h(&[1])).unwrap_err(), Error::Dvr);
    }

    #[test]
    fn rejects_bad_parameters() {
        let s = h(&[3, 7, 8]);
        assert!(matches!(
            CanonicalSetup::with_parameter(&s, 0),
            Err(Error::InvalidParameter { .. })
        ));
        // 3 + K contains 4, which is not in H.
        assert!(matches!(
            CanonicalSetup::with_parameter(&s, 3),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn sally_ranks() {
        assert_eq!(sally_rank(&h(&[3, 7, 8])).unwrap(), 2);
        assert_eq!(sally_rank(&h(&[3, 4, 5])).unwrap(), 1);
        assert_eq!(sally_rank(&h(&[2, 3])).unwrap(), 0);
    }

    #[test]
    fn hilbert_data() {
        let s = h(&[3, 7, 8]);
        assert_eq!(hilbert_function(&s, 6, 0).unwrap(), 4);
        for n in 1..=6 {
            assert_eq!(hilbert_function(&s, 6, n).unwrap(), 6 * n + 2);
            assert_eq!(sally_graded_length(&s, 6, n).unwrap(), 2);
        }
        assert_eq!(hilbert_coefficients(&s, 6).unwrap(), (6, 4));
        assert_eq!(hilbert_coefficients(&h(&[2, 3]), 2).unwrap(), (2, 0));
        let agl = h(&[3, 4, 5]);
        for n in 1..=6 {
            assert_eq!(sally_graded_length(&agl, 3, n).unwrap(), 1);
        }
        assert!(sally_graded_length(&s, 6, 0).is_err());
    }

    #[test]
    fn theorem14_vectors() {
        assert_eq!(theorem14_conditions(&h(&[3, 7, 8])).unwrap(), [true; 7]);
        assert_eq!(theorem14_conditions(&h(&[2, 3])).unwrap(), [false; 7]);
        assert_eq!(theorem14_conditions(&h(&[3, 4, 5])).unwrap(), [false; 7]);
    }

    #[test]
    fn agl_and_decompositions() {
        assert!(agl_test(&h(&[3, 4, 5])).unwrap());
        assert!(!agl_test(&h(&[3, 7, 8])).unwrap());
        assert!(agl_test(&h(&[2, 3])).unwrap());
        let d = |g: &[i64]| kr_decomposition(&h(g)).unwrap();
        assert_eq!(d(&[3, 7, 8]), KrDecomposition { free_rank: 1, socle_count: 0 });
        assert_eq!(d(&[4, 9, 11, 14]), KrDecomposition { free_rank: 1, socle_count: 1 });
        assert_eq!(d(&[5, 7, 9, 13]), KrDecomposition { free_rank: 1, socle_count: 0 });
        assert_eq!(kr_decomposition(&h(&[3, 4, 5])).unwrap_err(), Error::NotTwoAgl);
        assert!(freeness_test(&h(&[3, 7, 8])).unwrap());
        assert!(!freeness_test(&h(&[4, 9, 11, 14])).unwrap());
    }

    #[test]
    fn b_algebras() {
        let b = |g: &[i64]| b_algebra(&h(g)).unwrap().minimal_generators().to_vec();
        assert_eq!(b(&[3, 7, 8]), vec![3, 4, 5]);
        assert_eq!(b(&[5, 7, 9, 13]), vec![5, 7, 8, 9, 11]);
        assert_eq!(b(&[4, 9, 11, 14]), vec![4, 5, 7]);
        assert_eq!(b_algebra(&h(&[1])).unwrap_err(), Error::Dvr);
    }

    #[test]
    fn idealization() {
        let p = idealization_preview(&h(&[3, 7, 8])).unwrap();
        // c = [6, ∞) needs generators 6, 7, 8 over H.
        assert_eq!(
            p,
            IdealizationPreview {
                embedding_dimension: 6,
                multiplicity: 6,
                rank: 2
            }
        );
        assert_eq!(idealization_preview(&h(&[2, 3])).unwrap().rank, 0);
    }

    #[test]
    fn dossier_for_three_seven_eight() {
        let d = InvariantDossier::compute(&h(&[3, 7, 8])).unwrap();
        assert_eq!(d.classification, Classification::TwoAgl);
        assert_eq!((d.e0, d.e1, d.len_r_mod_i, d.reduction_number), (6, 4, 4, 2));
        assert_eq!(d.hilbert_values, vec![4, 8, 14, 20, 26, 32, 38]);
        assert_eq!(d.sally_lengths, vec![2; 6]);
        assert!(d.kr_free);
        assert_eq!(d.b_classification, Some(Classification::Agl));
        let json = serde_json::to_string(&d.to_json()).unwrap();
        assert!(json.contains(r#""class":"2-AGL","red":2"#), "{json}");
        let back: DossierJson = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn dossier_for_naturals() {
        let d = InvariantDossier::compute(&Arc::new(NumericalSemigroup::naturals())).unwrap();
        assert_eq!(d.classification, Classification::Dvr);
        assert_eq!(d.sally_rank, 0);
        assert!(d.b_semigroup.is_none());
        assert!(d.render_text().contains("Gorenstein (DVR)"));
    }

    #[test]
    fn labels_round_trip() {
        for c in [
            Classification::Dvr,
            Classification::Gorenstein,
            Classification::Agl,
            Classification::TwoAgl,
            Classification::Rank(5),
        ] {
            assert_eq!(Classification::parse_label(&c.label()).unwrap(), c);
        }
        assert!(Classification::parse_label("rank-2").is_err());
    }
}
