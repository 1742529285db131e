use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bodies::VPolytope;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::radii::{asymmetry, circumradius_value, diameter_value, inradius_value, Asymmetry};

use super::direct_factor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainId {
    Bohnenblust11,
    ExtBohnenblust12,
    JungBound13,
    Concentricity14,
    SymmetricChain15,
    Chain16,
    Chain17,
    Mirrored18,
    Generalized19,
    CompleteChain110,
    ExtendedJung111,
}

impl ChainId {
    pub const ALL: [ChainId; 11] = [
        ChainId::Bohnenblust11,
        ChainId::ExtBohnenblust12,
        ChainId::JungBound13,
        ChainId::Concentricity14,
        ChainId::SymmetricChain15,
        ChainId::Chain16,
        ChainId::Chain17,
        ChainId::Mirrored18,
        ChainId::Generalized19,
        ChainId::CompleteChain110,
        ChainId::ExtendedJung111,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChainId::Bohnenblust11 => "Bohnenblust-1.1",
            ChainId::ExtBohnenblust12 => "ExtBohnenblust-1.2",
            ChainId::JungBound13 => "JungBound-1.3",
            ChainId::Concentricity14 => "Concentricity-1.4",
            ChainId::SymmetricChain15 => "SymmetricChain-1.5",
            ChainId::Chain16 => "Chain-1.6",
            ChainId::Chain17 => "Chain-1.7",
            ChainId::Mirrored18 => "Mirrored-1.8",
            ChainId::Generalized19 => "Generalized-1.9",
            ChainId::CompleteChain110 => "CompleteChain-1.10",
            ChainId::ExtendedJung111 => "ExtendedJung-1.11",
        }
    }

    /// Whether the chain is only stated for symmetric gauges.
    pub fn needs_symmetric_gauge(self) -> bool {
        matches!(self, ChainId::Bohnenblust11 | ChainId::Concentricity14 | ChainId::SymmetricChain15)
    }
}

impl fmt::Display for ChainId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainId {
    type Err = Error;
    /// Accepts the full name or the numeric suffix, e.g. `1.10`.
    fn from_str(s: &str) -> Result<Self> {
        ChainId::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().rsplit('-').next() == Some(s))
            .ok_or_else(|| Error::Parse(format!("unknown chain {s:?}")))
    }
}

impl Serialize for ChainId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    /// a violated link
    Greater,
}

impl Relation {
    pub fn of(a: &Rational, b: &Rational) -> Relation {
        match a.cmp(b) {
            std::cmp::Ordering::Less => Relation::Less,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Greater => Relation::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// How `relations` relate to `values`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    /// `relations[i]` compares `values[i]` with `values[i + 1]`
    Inequalities,
    /// every value is the least dilation factor of one inclusion and
    /// `relations[i]` compares `values[i]` with 1; `=` marks an optimal
    /// containment
    Inclusions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub chain: ChainId,
    pub kind: ChainKind,
    pub values: Vec<Rational>,
    pub relations: Vec<Relation>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ChainReport {
    fn inequalities(chain: ChainId, values: Vec<Rational>) -> Self {
        let relations: Vec<Relation> = values.windows(2).map(|w| Relation::of(&w[0], &w[1])).collect();
        let holds = relations.iter().all(|r| *r != Relation::Greater);
        ChainReport { chain, kind: ChainKind::Inequalities, values, relations, holds, notes: Vec::new() }
    }

    fn inclusions(chain: ChainId, values: Vec<Rational>) -> Self {
        let one = Rational::one();
        let relations: Vec<Relation> = values.iter().map(|v| Relation::of(v, &one)).collect();
        let holds = relations.iter().all(|r| *r != Relation::Greater);
        ChainReport { chain, kind: ChainKind::Inclusions, values, relations, holds, notes: Vec::new() }
    }

    pub fn all_equal(&self) -> bool {
        self.relations.iter().all(|r| *r == Relation::Equal)
    }

    pub fn relation_symbols(&self) -> Vec<&'static str> {
        self.relations.iter().map(|r| r.symbol()).collect()
    }
}

/// The functionals every chain draws on, computed once per pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairRadii {
    pub dim: usize,
    /// `r(K, C)`
    pub inradius: Rational,
    /// `R(K, C)`
    pub circumradius: Rational,
    /// `r(K, -C)`
    pub inradius_mirrored: Rational,
    /// `D(K, C)`
    pub diameter: Rational,
    pub body_asymmetry: Asymmetry,
    pub gauge_asymmetry: Asymmetry,
}

impl PairRadii {
    pub fn compute(k: &VPolytope, c: &VPolytope) -> Result<Self> {
        if k.dim() != c.dim() {
            return Err(Error::DimensionMismatch { expected: k.dim(), found: c.dim() });
        }
        Ok(PairRadii {
            dim: k.dim(),
            inradius: inradius_value(k, c)?,
            circumradius: circumradius_value(k, c)?,
            inradius_mirrored: inradius_value(k, &c.negate())?,
            diameter: diameter_value(k, c)?,
            body_asymmetry: asymmetry(k)?,
            gauge_asymmetry: asymmetry(c)?,
        })
    }

    pub fn s_body(&self) -> &Rational {
        &self.body_asymmetry.s
    }

    pub fn s_gauge(&self) -> &Rational {
        &self.gauge_asymmetry.s
    }

    pub fn jung(&self) -> Result<Rational> {
        self.circumradius.checked_div(&self.diameter)
    }

    /// `(1 + s(C)) D / 2`
    pub fn right_end(&self) -> Rational {
        (Rational::one() + self.s_gauge()) * &self.diameter * Rational::new(1, 2).expect("nonzero")
    }
}

pub fn eval_chain(id: ChainId, k: &VPolytope, c: &VPolytope) -> Result<ChainReport> {
    let radii = PairRadii::compute(k, c)?;
    eval_chain_with(id, k, c, &radii)
}

/// Evaluates a chain from precomputed radii of `(k, c)`.
pub fn eval_chain_with(id: ChainId, k: &VPolytope, c: &VPolytope, p: &PairRadii) -> Result<ChainReport> {
    if id.needs_symmetric_gauge() && p.s_gauge() != &Rational::one() {
        return Err(Error::SymmetricGaugeRequired);
    }
    let one = Rational::one();
    let two = Rational::integer(2);
    let n = Rational::integer(p.dim as i64);
    let sk = p.s_body();
    let sc = p.s_gauge();
    let (r, big_r, rm, d) = (&p.inradius, &p.circumradius, &p.inradius_mirrored, &p.diameter);
    let left = (&one + sk) * rm;
    let mirrored = rm + big_r;
    let generalized = sc * r + big_r;
    let sym_mid = (&one + sk) / sk * big_r;
    let report = match id {
        ChainId::Bohnenblust11 => ChainReport::inequalities(id, vec![p.jung()?, &n / (&n + &one)]),
        ChainId::ExtBohnenblust12 => {
            ChainReport::inequalities(id, vec![p.jung()?, sk * (sc + &one) / (&two * (sk + &one))])
        }
        ChainId::JungBound13 => ChainReport::inequalities(id, vec![p.jung()?, &n * (sc + &one) / (&two * (&n + &one))]),
        ChainId::Concentricity14 => ChainReport::inequalities(id, vec![r + big_r, d.clone()]),
        ChainId::SymmetricChain15 => {
            ChainReport::inequalities(id, vec![(&one + sk) * r, r + big_r, sym_mid, d.clone()])
        }
        ChainId::Chain16 => ChainReport::inequalities(id, vec![left, mirrored, generalized, p.right_end()]),
        ChainId::Chain17 => ChainReport::inequalities(id, vec![left, mirrored, sym_mid, p.right_end()]),
        ChainId::Mirrored18 => ChainReport::inequalities(id, vec![mirrored, p.right_end()]),
        ChainId::Generalized19 => ChainReport::inequalities(id, vec![generalized, p.right_end()]),
        ChainId::CompleteChain110 => {
            let mut rep = ChainReport::inequalities(id, vec![left, mirrored, sym_mid, generalized, p.right_end()]);
            rep.notes.push("stated under the hypothesis that K is complete; not checked here".into());
            rep
        }
        ChainId::ExtendedJung111 => {
            // (s+1)/s K ⊂ K - K ⊂ D/2 (C - C) ⊂_t D/2 (s(C)+1) C, K centered
            let centered = k.translate(&p.body_asymmetry.center.neg())?;
            let dk = centered.difference_body();
            let first = centered.scale(&((sk + &one) / sk))?;
            let half_d = d / &two;
            let dc = c.difference_body();
            let rho1 = direct_factor(&first, &dk)?;
            let rho2 = direct_factor(&dk, &dc.scale(&half_d)?)?;
            let rho3 = circumradius_value(&dc, &c.scale(&(sc + &one))?)?;
            let mut rep = ChainReport::inclusions(id, vec![rho1, rho2, rho3]);
            rep.notes.push("K translated to a Minkowski center before the first inclusion".into());
            rep
        }
    };
    Ok(report)
}
