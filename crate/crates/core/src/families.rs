//! Parametric constructions of 2-AGL semigroups, each carrying the
//! invariants it is expected to have.
//!
//! A [`FamilyInstance`] stores its predictions as data; [`FamilyInstance::observe`]
//! evaluates the same invariants on a computed dossier so that callers own
//! all comparisons.

use std::fmt;
use std::sync::Arc;

use crate::classify::{Classification, DossierOptions, InvariantDossier};
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `H_n = ⟨e, h_1 + ne, ..., h_(e-1) + ne⟩` from a symmetric seed and
    /// its Apéry set `{0 = h_0 < h_1 < ... < h_(e-1)}` modulo `e`.
    AperyShift,
    /// `⟨3, c+3, 2c⟩`.
    MultiplicityThree,
    /// `⟨e, en+1, ..., en+e-2, 2en-(e+1)⟩`, free `K/R`.
    FreeQuotient,
    /// `⟨e, e+3, ..., 2e-1, 2e+1, 2e+2⟩`, non-free `K/R`.
    NonFreeQuotient,
}

impl FamilyKind {
    /// Name used on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::AperyShift => "thm710",
            FamilyKind::MultiplicityThree => "cor73",
            FamilyKind::FreeQuotient => "ex5",
            FamilyKind::NonFreeQuotient => "ex2",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(match tag {
            "thm710" => FamilyKind::AperyShift,
            "cor73" => FamilyKind::MultiplicityThree,
            "ex5" => FamilyKind::FreeQuotient,
            "ex2" => FamilyKind::NonFreeQuotient,
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

/// A value an invariant can take.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Bool(bool),
    Class(Classification),
    List(Vec<i64>),
    /// Rendered relative ideal.
    Ideal(String),
    /// `K/R ≅ (R/c)^k` with this `k`; `None` when `K/R` is not free over `R/c`.
    FreeRank(Option<usize>),
    Absent,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Class(c) => write!(f, "{c}"),
            Value::List(xs) => write!(f, "{xs:?}"),
            Value::Ideal(s) => f.write_str(s),
            Value::FreeRank(Some(k)) => write!(f, "(R/c)^{k}"),
            Value::FreeRank(None) => f.write_str("not free"),
            Value::Absent => f.write_str("-"),
        }
    }
}

/// Invariants a family can predict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    Class,
    Type,
    Multiplicity,
    EmbeddingDimension,
    MinimalMultiplicity,
    PseudoFrobenius,
    /// `K^2 = K^3`.
    KSquareStable,
    LenK2ModK,
    LenKModR,
    LenRModC,
    Conductor,
    /// `(free, socle)` of the 2-AGL decomposition of `K/R`.
    Decomposition,
    KrFree,
    KrFreeRank,
    BGenerators,
    BClass,
    /// `ℓ(L_q / L_(q+1))` for `L_q = M^q K + R`, `q = 0..n`.
    Filtration,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Class => "class",
            Invariant::Type => "type",
            Invariant::Multiplicity => "multiplicity",
            Invariant::EmbeddingDimension => "embedding_dimension",
            Invariant::MinimalMultiplicity => "minimal_multiplicity",
            Invariant::PseudoFrobenius => "pf",
            Invariant::KSquareStable => "k2_eq_k3",
            Invariant::LenK2ModK => "len_k2_mod_k",
            Invariant::LenKModR => "len_k_mod_r",
            Invariant::LenRModC => "len_r_mod_c",
            Invariant::Conductor => "conductor",
            Invariant::Decomposition => "decomp",
            Invariant::KrFree => "kr_free",
            Invariant::KrFreeRank => "kr_free_rank",
            Invariant::BGenerators => "b_gens",
            Invariant::BClass => "b_class",
            Invariant::Filtration => "filtration",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub invariant: Invariant,
    pub expected: Value,
    pub observed: Value,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub seed: Option<Vec<i64>>,
    pub e: Option<i64>,
    pub n: Option<i64>,
    pub c: Option<i64>,
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(seed) = &self.seed {
            let s: Vec<String> = seed.iter().map(i64::to_string).collect();
            parts.push(format!("seed=⟨{}⟩", s.join(",")));
        }
        for (name, v) in [("e", self.e), ("n", self.n), ("c", self.c)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub kind: FamilyKind,
    pub params: FamilyParams,
    pub semigroup: Arc<NumericalSemigroup>,
    pub predictions: Vec<(Invariant, Value)>,
}

impl FamilyInstance {
    /// Evaluates every predicted invariant on `dossier`.
    pub fn observe(&self, dossier: &InvariantDossier) -> Vec<Comparison> {
        self.predictions
            .iter()
            .map(|(inv, expected)| Comparison {
                invariant: *inv,
                expected: expected.clone(),
                observed: observe(*inv, dossier, self.params.n.unwrap_or(0)),
            })
            .collect()
    }

    /// Computes the dossier and compares; a dossier error is returned as is.
    pub fn check(&self) -> Result<Vec<Comparison>> {
        let dossier = InvariantDossier::compute_with(&self.semigroup, DossierOptions::default())?;
        Ok(self.observe(&dossier))
    }
}

/// `ℓ(L_q / L_(q+1))` for `q = 0..steps`, where `L_q = M^q + K ∪ H` (sumset).
pub fn filtration_lengths(dossier: &InvariantDossier, steps: usize) -> Vec<usize> {
    let setup = &dossier.setup;
    let mut layers = Vec::with_capacity(steps + 1);
    let mut m_power_k = setup.k.clone();
    for _ in 0..=steps {
        layers.push(m_power_k.union(&setup.ring).expect("same host"));
        m_power_k = setup.maximal.sum(&m_power_k).expect("same host");
    }
    layers
        .windows(2)
        .map(|w| w[0].difference(&w[1]).len())
        .collect()
}

/// The rank `k` with `K/R ≅ (R/c)^k`, if `K/R` is free over `R/c`.
/// The canonical map from `(R/c)^μ` onto `K/R` is an isomorphism exactly
/// when the lengths match.
pub fn kr_free_rank(dossier: &InvariantDossier) -> Option<usize> {
    let setup = &dossier.setup;
    let mu = setup.kr_generator_count();
    let len_r_c = setup.ring.length_quotient(&setup.conductor).ok()?;
    (dossier.len_k_mod_r == mu * len_r_c).then_some(mu)
}

fn observe(inv: Invariant, d: &InvariantDossier, n: i64) -> Value {
    let h = d.semigroup();
    let setup = &d.setup;
    match inv {
        Invariant::Class => Value::Class(d.classification),
        Invariant::Type => Value::Int(d.type_r as i64),
        Invariant::Multiplicity => Value::Int(h.multiplicity()),
        Invariant::EmbeddingDimension => Value::Int(h.embedding_dimension() as i64),
        Invariant::MinimalMultiplicity => Value::Bool(d.minimal_multiplicity),
        Invariant::PseudoFrobenius => Value::List(h.pseudo_frobenius().to_vec()),
        Invariant::KSquareStable => Value::Bool(setup.k_power(2) == setup.k_power(3)),
        Invariant::LenK2ModK => Value::Int(d.len_k2_mod_k as i64),
        Invariant::LenKModR => Value::Int(d.len_k_mod_r as i64),
        Invariant::LenRModC => Value::Int(
            setup
                .ring
                .length_quotient(&setup.conductor)
                .expect("c ⊆ H") as i64,
        ),
        Invariant::Conductor => Value::Ideal(d.conductor_c().to_string()),
        Invariant::Decomposition => match d.decomposition {
            Some(dec) => Value::List(vec![dec.free_rank as i64, dec.socle_count as i64]),
            None => Value::Absent,
        },
        Invariant::KrFree => Value::Bool(d.kr_free),
        Invariant::KrFreeRank => Value::FreeRank(kr_free_rank(d)),
        Invariant::BGenerators => match &d.b_semigroup {
            Some(b) => Value::List(b.minimal_generators().to_vec()),
            None => Value::Absent,
        },
        Invariant::BClass => match d.b_classification {
            Some(c) => Value::Class(c),
            None => Value::Absent,
        },
        Invariant::Filtration => Value::List(
            filtration_lengths(d, n.max(0) as usize)
                .into_iter()
                .map(|x| x as i64)
                .collect(),
        ),
    }
}

fn param_error(msg: impl Into<String>) -> Error {
    Error::FamilyParameter(msg.into())
}

/// `H_n` built from a symmetric seed and a nonzero member `e`.
pub fn thm710_family(seed: &NumericalSemigroup, e: i64, n: i64) -> Result<FamilyInstance> {
    if !seed.is_symmetric() {
        return Err(param_error(format!("seed {seed} is not symmetric")));
    }
    if e < 2 || !seed.contains(e) {
        return Err(param_error(format!("e = {e} must be a member of {seed} and at least 2")));
    }
    if n < 0 {
        return Err(param_error("n must be non-negative"));
    }
    let apery = seed.apery_set(e)?;
    let mut gens = vec![e];
    gens.extend(apery[1..].iter().map(|&h| h + n * e));
    let hn = Arc::new(NumericalSemigroup::from_generators(&gens)?);

    let eu = e as usize;
    let mut predictions = vec![
        (Invariant::KSquareStable, Value::Bool(true)),
        (Invariant::LenK2ModK, Value::Int(n)),
    ];
    if n == 0 {
        predictions.push((Invariant::Class, Value::Class(Classification::Gorenstein)));
    } else {
        let pf: Vec<i64> = apery[1..].iter().map(|&h| h + (n - 1) * e).collect();
        let conductor_offsets: Vec<i64> = apery.iter().map(|&h| h + n * e).collect();
        let conductor = RelativeIdeal::from_offsets(&hn, &conductor_offsets)?;
        predictions.extend([
            (Invariant::Multiplicity, Value::Int(e)),
            (Invariant::EmbeddingDimension, Value::Int(e)),
            (Invariant::PseudoFrobenius, Value::List(pf)),
            (Invariant::Conductor, Value::Ideal(conductor.to_string())),
            (Invariant::LenRModC, Value::Int(n)),
            (Invariant::LenKModR, Value::Int(n * (e - 2))),
            (Invariant::KrFreeRank, Value::FreeRank(Some(eu - 2))),
            (Invariant::Filtration, Value::List(vec![e - 2; n as usize])),
        ]);
    }
    if n == 2 {
        predictions.extend([
            (Invariant::Class, Value::Class(Classification::TwoAgl)),
            (Invariant::Decomposition, Value::List(vec![e - 2, 0])),
            (Invariant::KrFree, Value::Bool(true)),
        ]);
    }
    predictions.sort_by_key(|(inv, _)| *inv);
    Ok(FamilyInstance {
        kind: FamilyKind::AperyShift,
        params: FamilyParams {
            seed: Some(seed.minimal_generators().to_vec()),
            e: Some(e),
            n: Some(n),
            c: None,
        },
        semigroup: hn,
        predictions,
    })
}

/// `⟨3, c+3, 2c⟩` for `c >= 4`, `c ≢ 0 (mod 3)`.
pub fn cor73_family(c: i64) -> Result<FamilyInstance> {
    if c < 4 || c % 3 == 0 {
        return Err(param_error(format!("c = {c} needs c >= 4 and c not divisible by 3")));
    }
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, c + 3, 2 * c])?);
    Ok(FamilyInstance {
        kind: FamilyKind::MultiplicityThree,
        params: FamilyParams {
            c: Some(c),
            ..Default::default()
        },
        semigroup: h,
        predictions: vec![
            (Invariant::Class, Value::Class(Classification::TwoAgl)),
            (Invariant::Type, Value::Int(2)),
            (Invariant::Multiplicity, Value::Int(3)),
            (Invariant::EmbeddingDimension, Value::Int(3)),
            (Invariant::Decomposition, Value::List(vec![1, 0])),
            (Invariant::KrFree, Value::Bool(true)),
        ],
    })
}

/// `⟨e, en+1, ..., en+e-2, 2en-(e+1)⟩` for `e >= 3`, `n >= 2`.
pub fn ex5_family(e: i64, n: i64) -> Result<FamilyInstance> {
    if e < 3 || n < 2 {
        return Err(param_error(format!("(e, n) = ({e}, {n}) needs e >= 3 and n >= 2")));
    }
    let mut gens = vec![e];
    gens.extend((1..=e - 2).map(|i| e * n + i));
    gens.push(2 * e * n - (e + 1));
    let h = Arc::new(NumericalSemigroup::from_generators(&gens)?);
    Ok(FamilyInstance {
        kind: FamilyKind::FreeQuotient,
        params: FamilyParams {
            e: Some(e),
            n: Some(n),
            ..Default::default()
        },
        semigroup: h,
        predictions: vec![
            (Invariant::Class, Value::Class(Classification::TwoAgl)),
            (Invariant::Type, Value::Int(e - 1)),
            (Invariant::MinimalMultiplicity, Value::Bool(true)),
            (Invariant::LenKModR, Value::Int(2 * (e - 2))),
            (Invariant::Decomposition, Value::List(vec![e - 2, 0])),
            (Invariant::KrFree, Value::Bool(true)),
        ],
    })
}

/// `⟨e, e+3, ..., 2e-1, 2e+1, 2e+2⟩` for `e >= 4`.
pub fn ex2_family(e: i64) -> Result<FamilyInstance> {
    if e < 4 {
        return Err(param_error(format!("e = {e} needs e >= 4")));
    }
    let mut gens = vec![e];
    gens.extend((3..=e - 1).map(|i| e + i));
    gens.extend([2 * e + 1, 2 * e + 2]);
    let h = Arc::new(NumericalSemigroup::from_generators(&gens)?);
    Ok(FamilyInstance {
        kind: FamilyKind::NonFreeQuotient,
        params: FamilyParams {
            e: Some(e),
            ..Default::default()
        },
        semigroup: h,
        predictions: vec![
            (Invariant::Class, Value::Class(Classification::TwoAgl)),
            (Invariant::Type, Value::Int(e - 1)),
            (Invariant::MinimalMultiplicity, Value::Bool(true)),
            (Invariant::Decomposition, Value::List(vec![1, e - 3])),
            (Invariant::KrFree, Value::Bool(false)),
            (Invariant::BGenerators, Value::List(vec![3, 4, 5])),
            (Invariant::BClass, Value::Class(Classification::Agl)),
        ],
    })
}

/// Builds a family from its tag and whichever parameters it uses.
pub fn construct(kind: FamilyKind, params: &FamilyParams) -> Result<FamilyInstance> {
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| param_error(format!("{} needs --{name}", kind.tag())))
    };
    match kind {
        FamilyKind::AperyShift => {
            let seed = params
                .seed
                .as_ref()
                .ok_or_else(|| param_error("thm710 needs --seed"))?;
            let seed = NumericalSemigroup::from_generators(seed)?;
            thm710_family(&seed, need(params.e, "e")?, need(params.n, "n")?)
        }
        FamilyKind::MultiplicityThree => cor73_family(need(params.c, "c")?),
        FamilyKind::FreeQuotient => ex5_family(need(params.e, "e")?, need(params.n, "n")?),
        FamilyKind::NonFreeQuotient => ex2_family(need(params.e, "e")?),
    }
}
