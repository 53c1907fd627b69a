//! Exhaustive comparison of the closed forms against the oracles over every
//! lexsegment in a range of `(n, d)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::monomial::{AmbientContext, Monomial};
use crate::oracle;
use crate::quotients::{g_formula, prec_order, quotient_order, OrderKind, OrderedGenerators};
use crate::resolution::{build_resolution, hilbert_numerator, verify_resolution};
use crate::segment::{monomials_of_degree, Lexsegment};

/// Generator count up to which the Taylor and Koszul routes are compared.
pub const TAYLOR_CROSS_CHECK: usize = 12;

/// Generator count up to which the two K-polynomial routes are compared.
pub const SUBSET_K_POLY_CROSS_CHECK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub min_d: u32,
    pub max_d: u32,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl SweepConfig {
    pub fn new(min_n: usize, max_n: usize, min_d: u32, max_d: u32) -> Self {
        Self { min_n, max_n, min_d, max_d, workers: None }
    }
}

/// One `L(u, v)`, identified by its ends.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub n: usize,
    pub d: u32,
    pub u: Monomial,
    pub v: Monomial,
}

impl Instance {
    pub fn segment(&self) -> Result<Lexsegment> {
        Lexsegment::new(AmbientContext::new(self.n, self.d)?, self.u.clone(), self.v.clone())
    }

    /// Command-line flags reproducing this instance.
    pub fn flags(&self) -> String {
        format!("--n {} --d {} --u {} --v {}", self.n, self.d, self.u, self.v)
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {}) in {} variables", self.u, self.v, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub instance: Instance,
    pub check: &'static str,
    pub detail: String,
}

/// Names of the comparisons, in report order.
pub const CHECKS: [&str; 9] = [
    "linear-resolution-vs-betti",
    "linear-resolution-vs-quotients",
    "invariants-vs-oracle",
    "one-not-in-set",
    "g-formula-vs-scan",
    "resolution",
    "euler-characteristic",
    "taylor-vs-koszul",
    "k-polynomial-routes",
];

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    /// Clause labels that fired, e.g. `"linear:c"` or `"depth:zero"`.
    pub clauses: Vec<String>,
    /// How often each check was applied.
    pub applied: BTreeMap<&'static str, usize>,
    pub mismatches: Vec<Mismatch>,
}

impl InstanceOutcome {
    fn apply(&mut self, check: &'static str) {
        *self.applied.entry(check).or_insert(0) += 1;
    }

    fn expect(&mut self, instance: &Instance, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.apply(check);
        if !ok {
            self.mismatches.push(Mismatch { instance: instance.clone(), check, detail: detail() });
        }
    }
}

/// Every comparison for one segment.
pub fn check_instance(instance: &Instance) -> Result<InstanceOutcome> {
    let seg = instance.segment()?;
    let (n, d) = (seg.n(), seg.d());
    let gens = seg.generators();
    let mut out = InstanceOutcome::default();

    let cls = classify(&seg);
    out.clauses.push(format!("linear:{}", cls.linear.case.label()));
    out.clauses.push(format!("dim:{}", cls.dim.case));
    out.clauses.push(format!("depth:{}", cls.depth.case));
    out.clauses.push(format!("cm:{}", cls.cohen_macaulay.case));

    let betti = oracle::betti_table(gens, n)?;

    // (i)
    let concentrated = betti.is_linear(d);
    out.expect(instance, "linear-resolution-vs-betti", cls.linear.linear == concentrated, || {
        format!(
            "classify says {} ({}), Betti table linear = {concentrated}",
            cls.linear.linear,
            cls.linear.case.label()
        )
    });

    // (ii)
    let order = quotient_order(&seg);
    out.clauses.push(format!("order:{}", if order.kind == OrderKind::Prec { "prec" } else { "split" }));
    let chosen = OrderedGenerators::new(order.generators.clone())?;
    let lq = chosen.has_linear_quotients();
    out.expect(instance, "linear-resolution-vs-quotients", cls.linear.linear == lq, || {
        let at = chosen.first_failure().map(|f| f.generator.to_string()).unwrap_or_default();
        format!("linear resolution {}, linear quotients {lq} {at}", cls.linear.linear)
    });

    // (iii)
    let projdim = betti.projdim();
    let depth = n - projdim;
    let dim = oracle::dimension(gens, n)?;
    let agree = cls.depth.value == depth
        && cls.dim.value == dim
        && cls.projdim.value == projdim
        && cls.cohen_macaulay.cohen_macaulay == (depth == dim);
    out.expect(instance, "invariants-vs-oracle", agree, || {
        format!(
            "classify depth {} ({}) dim {} ({}) projdim {} cm {}; oracle depth {depth} dim {dim} projdim {projdim}",
            cls.depth.value,
            cls.depth.case,
            cls.dim.value,
            cls.dim.case,
            cls.projdim.value,
            cls.cohen_macaulay.cohen_macaulay
        )
    });

    // (iv) and (v)
    let prec = OrderedGenerators::new(prec_order(&seg))?;
    if prec.has_linear_quotients() {
        for j in 0..prec.len() {
            let set = prec.set_of(j)?;
            let w = &prec.generators()[j];
            out.expect(instance, "one-not-in-set", !set.contains(&0), || format!("1 in set({w})"));
        }
        if cls.linear.complete && cls.linear.linear {
            for j in 0..prec.len() {
                let w = prec.generators()[j].clone();
                for &s in prec.set_of(j)? {
                    let scanned = prec.decomposition_g(&w.mul_var(s))?.clone();
                    let formula = g_formula(&seg, &w, s);
                    out.expect(instance, "g-formula-vs-scan", formula.as_ref() == Ok(&scanned), || {
                        format!("g(x{} {w}): formula {formula:?}, scan {scanned}", s + 1)
                    });
                }
            }
        }
    }

    // (vi)
    let k_poly = oracle::k_polynomial_staircase(gens, n)?;
    match build_resolution(&seg) {
        Ok(res) => {
            out.clauses.push("resolution:built".into());
            let report = verify_resolution(&res, gens, None);
            let numerator = hilbert_numerator(&res);
            let ok = report.passed() && numerator == k_poly && res.betti() == betti;
            out.expect(instance, "resolution", ok, || {
                format!("verification {report:?}; numerator {numerator}, K-polynomial {k_poly}")
            });
        }
        Err(Error::Unsupported(why)) => {
            out.clauses.push("resolution:refused".into());
            let expected_refusal = !(cls.linear.complete && cls.linear.linear);
            out.expect(instance, "resolution", expected_refusal, || why);
        }
        Err(e) => out.expect(instance, "resolution", false, || e.to_string()),
    }

    // oracle self-consistency
    let euler = betti.euler_polynomial();
    out.expect(instance, "euler-characteristic", euler == k_poly, || {
        format!("alternating Betti sum {euler}, K-polynomial {k_poly}")
    });
    if gens.len() <= TAYLOR_CROSS_CHECK {
        let taylor = oracle::taylor_betti(gens, n, oracle::DEFAULT_CAP)?;
        let koszul = oracle::koszul_betti(gens, n)?;
        out.expect(instance, "taylor-vs-koszul", taylor == koszul && betti.total(1) == gens.len(), || {
            format!("taylor {taylor:?}, koszul {koszul:?}")
        });
    }
    if gens.len() <= SUBSET_K_POLY_CROSS_CHECK {
        let subset = oracle::k_polynomial(gens, n, oracle::DEFAULT_CAP)?;
        out.expect(instance, "k-polynomial-routes", subset == k_poly, || {
            format!("subsets {subset}, staircase {k_poly}")
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    /// Instance count per `(n, d)`, keyed `"n=.. d=.."`.
    pub per_context: BTreeMap<String, usize>,
    pub clauses: BTreeMap<String, usize>,
    pub applied: BTreeMap<&'static str, usize>,
    pub mismatches: Vec<Mismatch>,
}

impl SweepSummary {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The mismatch with the fewest variables, then lowest degree, then
    /// fewest generators.
    pub fn minimal_failure(&self) -> Option<&Mismatch> {
        self.mismatches.iter().min_by_key(|m| {
            let size = m.instance.segment().map(|s| s.generators().len()).unwrap_or(usize::MAX);
            (m.instance.n, m.instance.d, size, m.instance.clone(), m.check)
        })
    }
}

/// Every `L(u, v)` with `u >=lex v` for the given ranges, in a fixed order.
pub fn instances(config: &SweepConfig) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in config.min_n..=config.max_n {
        for d in config.min_d..=config.max_d {
            AmbientContext::new(n, d)?;
            let mons: Vec<Monomial> = monomials_of_degree(n, d).collect();
            for (i, u) in mons.iter().enumerate() {
                for v in &mons[i..] {
                    out.push(Instance { n, d, u: u.clone(), v: v.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// Run [`check_instance`] on every instance; results are merged in
/// enumeration order regardless of the worker count.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    let all = instances(config)?;
    let work = || all.par_iter().map(check_instance).collect::<Result<Vec<_>>>();
    let outcomes = match config.workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut summary = SweepSummary { instances: all.len(), ..SweepSummary::default() };
    for (inst, outcome) in all.iter().zip(outcomes) {
        *summary.per_context.entry(format!("n={} d={}", inst.n, inst.d)).or_insert(0) += 1;
        for c in outcome.clauses {
            *summary.clauses.entry(c).or_insert(0) += 1;
        }
        for (k, v) in outcome.applied {
            *summary.applied.entry(k).or_insert(0) += v;
        }
        summary.mismatches.extend(outcome.mismatches);
    }
    Ok(summary)
}
