//! Verification suites and the exploration harness.

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::{json, Value};

use polyradii::bodies::{simplex_hrep, Direction, VPolytope};
use polyradii::constructions::{random_pair, random_vpolytope, standard_centered_simplex, Sampler};
use polyradii::exact::{Rational, RationalVector};
use polyradii::radii::{asymmetry, asymmetry_value, circumradius_value, inradius_value};
use polyradii::theorems::{
    are_mutually_concentric, check_lemma31, check_lemma32, check_prop33_lemma34, completeness, corollary42_check,
    corollary47_conditions, eval_chain_with, is_minkowski_concentric, remark35_check, simplex_complete,
    theorem14_conditions, ChainId, Completeness, PairRadii,
};

use crate::report::RunReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Chains,
    Lemma31,
    Lemma32,
    Prop33,
    Theorem14,
    Corollary47,
    Remark35,
    Corollary42,
}

impl Suite {
    fn needs_simplex(self) -> bool {
        matches!(self, Suite::Theorem14 | Suite::Corollary47 | Suite::Corollary42)
    }
}

pub struct Instance {
    pub label: String,
    pub body: VPolytope,
    pub gauge: VPolytope,
}

/// Full-dimensional simplex with small rational vertices.
pub fn random_simplex(dim: usize, sampler: &mut Sampler) -> Result<VPolytope> {
    for _ in 0..64 {
        let pts: Vec<RationalVector> = (0..=dim).map(|_| sampler.point(dim, 3)).collect();
        let s = VPolytope::new(dim, pts)?;
        if s.is_full_dimensional() {
            return Ok(s);
        }
    }
    bail!("could not draw a nondegenerate simplex")
}

fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(31).wrapping_add(i as u64)
}

pub fn random_instance(suite: Suite, dim: usize, seed: u64, i: usize) -> Result<Instance> {
    let s = trial_seed(seed, i);
    let (body, gauge) = if suite.needs_simplex() {
        let body = random_simplex(dim, &mut Sampler::new(s))?;
        (body, random_vpolytope(dim, 2 * dim + 2, 3, s ^ 0x9e37_79b9)?.canonical())
    } else {
        random_pair(dim, 8, 3, s)?
    };
    Ok(Instance { label: format!("trial {i} (seed {s})"), body, gauge })
}

fn chains(k: &VPolytope, c: &VPolytope) -> Result<(Value, bool)> {
    let p = PairRadii::compute(k, c)?;
    let mut reports = Vec::new();
    let mut ok = true;
    let mut push = |on: &str, rep: polyradii::theorems::ChainReport| {
        ok &= rep.holds;
        reports.push(json!({ "on": on, "report": rep }));
    };
    for id in [
        ChainId::ExtBohnenblust12,
        ChainId::JungBound13,
        ChainId::Chain16,
        ChainId::Chain17,
        ChainId::Mirrored18,
        ChainId::Generalized19,
        ChainId::ExtendedJung111,
    ] {
        push("(K, C)", eval_chain_with(id, k, c, &p)?);
    }
    // the symmetric-gauge chains go to C - C and to (C, K - K) otherwise
    if p.s_gauge() == &Rational::one() {
        for id in [ChainId::Bohnenblust11, ChainId::Concentricity14, ChainId::SymmetricChain15] {
            push("(K, C)", eval_chain_with(id, k, c, &p)?);
        }
    } else {
        let cc = c.difference_body();
        push("(K, C - C)", eval_chain_with(ChainId::Bohnenblust11, k, &cc, &PairRadii::compute(k, &cc)?)?);
        let kk = k.difference_body();
        let pk = PairRadii::compute(c, &kk)?;
        for id in [ChainId::Concentricity14, ChainId::SymmetricChain15] {
            push("(C, K - K)", eval_chain_with(id, c, &kk, &pk)?);
        }
    }
    let complete = completeness(k, c)?;
    if complete == Completeness::Complete {
        push("(K, C)", eval_chain_with(ChainId::CompleteChain110, k, c, &p)?);
    }
    Ok((json!({ "completeness": complete, "chains": reports }), ok))
}

fn lemma32(c: &VPolytope, r: &Rational) -> Result<(Value, bool)> {
    let a = asymmetry(c)?;
    let c = c.translate(&a.center.neg())?;
    let n = c.dim();
    let mut dirs: Vec<Direction> = Vec::new();
    for axis in 0..n {
        let e = RationalVector::unit(n, axis);
        dirs.push(Direction::new(e.neg())?);
        dirs.push(Direction::new(e)?);
    }
    for f in c.facets().unwrap_or(&[]) {
        dirs.push(Direction::new(f.normal.clone())?);
    }
    let holds = check_lemma32(&c, r, &dirs)?;
    Ok((json!({ "r": r, "s": a.s, "center": a.center, "directions": dirs.len(), "holds": holds }), holds))
}

fn evaluate(suite: Suite, inst: &Instance, r: &Rational) -> Result<(Value, bool)> {
    let (k, c) = (&inst.body, &inst.gauge);
    Ok(match suite {
        Suite::Chains => chains(k, c)?,
        Suite::Lemma31 => {
            let rep = check_lemma31(k, c)?;
            let ok = rep.holds;
            (serde_json::to_value(rep)?, ok)
        }
        Suite::Lemma32 => lemma32(c, r)?,
        Suite::Prop33 => {
            let rep = check_prop33_lemma34(k, c)?;
            let ok = rep.holds;
            (serde_json::to_value(rep)?, ok)
        }
        // for the equivalences the contract is that all conditions agree
        Suite::Theorem14 => {
            let v = theorem14_conditions(k, c)?;
            let ok = v.consistent;
            (serde_json::to_value(v)?, ok)
        }
        Suite::Corollary47 => {
            let v = corollary47_conditions(k, c)?;
            let ok = v.consistent;
            (serde_json::to_value(v)?, ok)
        }
        Suite::Remark35 => {
            let v = remark35_check(k, c)?;
            let ok = v.consistent && !v.notes.iter().any(|n| n.contains("violated"));
            (serde_json::to_value(v)?, ok)
        }
        Suite::Corollary42 => {
            let rep = corollary42_check(k, c)?;
            let ok = rep.holds;
            (serde_json::to_value(rep)?, ok)
        }
    })
}

/// Details are listed for small runs; larger runs keep counts and the
/// labels of failing instances.
const DETAIL_LIMIT: usize = 10;

pub fn run(suite: Suite, instances: &[Instance], r: &Rational, report: &mut RunReport) -> Result<()> {
    let mut details = Vec::new();
    let mut failing: Vec<(usize, Value)> = Vec::new();
    for inst in instances {
        let (value, ok) = evaluate(suite, inst, r)?;
        if !ok {
            let size = inst.body.vertices().len() + inst.gauge.vertices().len();
            failing.push((
                size,
                json!({ "label": inst.label, "body": inst.body, "gauge": inst.gauge, "result": value.clone() }),
            ));
        }
        if instances.len() <= DETAIL_LIMIT {
            details.push(json!({ "label": inst.label, "ok": ok, "result": value }));
        }
    }
    let failed: Vec<&Value> = failing.iter().map(|(_, v)| &v["label"]).collect();
    report.results = json!({
        "suite": suite.to_possible_value().map(|v| v.get_name().to_string()),
        "checked": instances.len(),
        "violations": failing.len(),
        "failing": failed,
        "instances": details,
    });
    // smallest failing instance, earliest on ties
    if let Some((_, cx)) = failing.into_iter().min_by_key(|(size, _)| *size) {
        report.fail(cx);
    }
    Ok(())
}

fn cap_point(s: &VPolytope, sampler: &mut Sampler) -> Result<Option<RationalVector>> {
    let n = s.dim();
    let h = simplex_hrep(s)?;
    let cap = h.intersect(&h.negate())?.scale(&Rational::integer(n as i64 + 1))?;
    for _ in 0..32 {
        let p = sampler.point(n, n as i64 + 1);
        if cap.contains_point(&p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Gauges of three kinds: arbitrary polytopes, `conv((S - S) ∪ {p})` with
/// `p ∈ (n+1)(S ∩ -S)`, and mixtures `λS + μ(-S)`.
fn explore_gauge(s: &VPolytope, seed: u64, i: usize) -> Result<(&'static str, VPolytope)> {
    let n = s.dim();
    let ts = trial_seed(seed, i);
    let mut sampler = Sampler::new(ts);
    Ok(match i % 3 {
        0 => ("random", random_vpolytope(n, 2 * n + 2, 3, ts)?.canonical()),
        1 => {
            let mut pts = s.difference_body().vertices().to_vec();
            if let Some(p) = cap_point(s, &mut sampler)? {
                pts.push(p);
            }
            ("cap-point", VPolytope::new(n, pts)?.canonical())
        }
        _ => {
            let lambda = Rational::integer(sampler.int_in(0, 4));
            let mu = Rational::integer(sampler.int_in(0, 4));
            let (lambda, mu) = if lambda.is_zero() && mu.is_zero() { (Rational::one(), mu) } else { (lambda, mu) };
            ("mixture", s.scale(&lambda)?.minkowski_sum(&s.negate().scale(&mu)?)?.canonical())
        }
    })
}

/// Looks for simplices that are complete and concentric in every sense but
/// whose ratio `R/r` lies strictly inside `(n/s(C), n s(C))`.
pub fn explore(trials: usize, seed: u64, dim: usize, report: &mut RunReport) -> Result<()> {
    let s = standard_centered_simplex(dim)?;
    let neg = s.negate();
    let nn = Rational::integer(dim as i64);
    let (mut complete, mut literal, mut mutual, mut strict) = (0usize, 0usize, 0usize, 0usize);
    let mut hits = Vec::new();
    let mut mutual_hits = Vec::new();
    for i in 0..trials {
        let (kind, c) = explore_gauge(&s, seed, i)?;
        if !simplex_complete(&s, &c)?.0 {
            continue;
        }
        complete += 1;
        let literal_ok = is_minkowski_concentric(&c, &s)?
            && is_minkowski_concentric(&c, &neg)?
            && is_minkowski_concentric(&s, &c)?
            && is_minkowski_concentric(&neg, &c)?;
        if !literal_ok {
            continue;
        }
        literal += 1;
        let mutual_ok = are_mutually_concentric(&c, &s)? && are_mutually_concentric(&c, &neg)?;
        if mutual_ok {
            mutual += 1;
        }
        let sc = asymmetry_value(&c)?;
        let ratio = circumradius_value(&s, &c)? / inradius_value(&s, &c)?;
        if ratio <= &nn / &sc || ratio >= &nn * &sc {
            continue;
        }
        strict += 1;
        let hit = json!({ "trial": i, "kind": kind, "gauge": c, "ratio": ratio, "s_gauge": sc, "mutual": mutual_ok });
        if mutual_ok {
            mutual_hits.push(hit.clone());
        }
        hits.push(hit);
    }
    report.inputs.push(crate::report::InputDigest {
        role: "generated".into(),
        source: format!("explore dim={dim} trials={trials} seed={seed}"),
        sha256: String::new(),
    });
    report.results = json!({
        "simplex": s,
        "trials": trials,
        "complete": complete,
        "concentric_literal": literal,
        "concentric_mutual": mutual,
        "strict_ratio": strict,
        "hits": hits,
        "hits_mutual": mutual_hits,
    });
    Ok(())
}
