//! JSON forms of analyses and resolutions.
//!
//! Variables are 1-based here, as in the textual monomial form; everything
//! else in the crate is 0-based. Objects are `serde_json` maps, so keys come
//! out sorted.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::classify::classify;
use crate::error::Result;
use crate::oracle;
use crate::quotients::{quotient_order, OrderedGenerators};
use crate::resolution::{betti_from_sets, build_resolution, hilbert_numerator, GradedResolution, VerificationReport};
use crate::segment::{Lexsegment, DEFAULT_SHADOW_DEPTH};

fn one_based(set: &BTreeSet<usize>) -> Vec<usize> {
    set.iter().map(|s| s + 1).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub check_oracle: bool,
    pub resolution: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub json: Value,
    /// `Some(all agree)` when the oracle was consulted.
    pub oracle_agreement: Option<bool>,
}

/// Everything the closed forms say about `L(u, v)`.
pub fn analyze(seg: &Lexsegment, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let n = seg.n();
    let cls = classify(seg);
    let completeness = seg.completeness(DEFAULT_SHADOW_DEPTH);
    let order = quotient_order(seg);
    let og = OrderedGenerators::new(order.generators.clone())?;
    let failure = og.first_failure();
    let lq = failure.is_none();

    let (sets, regular, betti) = if lq {
        let sets: Vec<Vec<usize>> = (0..og.len()).map(|j| og.set_of(j).map(one_based)).collect::<Result<_>>()?;
        let reg = og.regularity()?;
        let regular = json!({
            "regular": reg.regular,
            "witness": reg.witness.map(|w| json!({
                "generator": w.generator,
                "var": w.var + 1,
                "image": w.image,
                "image_set": one_based(&w.image_set),
                "set": one_based(&w.set),
            })),
        });
        (json!(sets), regular, json!({ "source": "sets", "table": betti_from_sets(&og)? }))
    } else {
        let table = oracle::betti_table(seg.generators(), n)?;
        (Value::Null, Value::Null, json!({ "source": "oracle", "table": table }))
    };

    let mut report = json!({
        "n": n,
        "d": seg.d(),
        "u": seg.u(),
        "v": seg.v(),
        "generators": seg.generators().len(),
        "completely": completeness.complete,
        "completeness_checked_through": completeness.checked_through,
        "linear_resolution": cls.linear.linear,
        "case": {
            "linear_resolution": cls.linear.case.label(),
            "dim": cls.dim.case,
            "depth": cls.depth.case,
            "cohen_macaulay": cls.cohen_macaulay.case,
        },
        "order": { "kind": order.kind, "generators": order.generators },
        "linear_quotients": lq,
        "quotient_failure": failure.map(|f| json!({
            "position": f.index + 1,
            "generator": f.generator,
            "colon": f.colon,
        })),
        "sets": sets,
        "regular_decomposition": regular,
        "depth": cls.depth.value,
        "dim": cls.dim.value,
        "projdim": cls.projdim.value,
        "cohen_macaulay": cls.cohen_macaulay.cohen_macaulay,
        "betti": betti,
    });

    let mut agreement = None;
    if options.check_oracle {
        let gens = seg.generators();
        let table = oracle::betti_table(gens, n)?;
        let projdim = table.projdim();
        let depth = n - projdim;
        let dim = oracle::dimension(gens, n)?;
        let betti_ok = !lq || betti_from_sets(&og)? == table;
        let checks = json!({
            "betti": betti_ok,
            "linear_resolution": table.is_linear(seg.d()) == cls.linear.linear,
            "depth": depth == cls.depth.value,
            "dim": dim == cls.dim.value,
            "projdim": projdim == cls.projdim.value,
            "cohen_macaulay": (depth == dim) == cls.cohen_macaulay.cohen_macaulay,
        });
        let all = checks.as_object().expect("object literal").values().all(|v| v == &Value::Bool(true));
        report["oracle_agreement"] = json!({
            "all": all,
            "checks": checks,
            "oracle": { "depth": depth, "dim": dim, "projdim": projdim, "betti": table },
        });
        agreement = Some(all);
    }
    if options.resolution {
        report["resolution"] = match build_resolution(seg) {
            Ok(res) => resolution_json(&res),
            Err(e) => json!({ "unsupported": e.to_string() }),
        };
    }
    Ok(AnalysisReport { json: report, oracle_agreement: agreement })
}

/// Basis symbols with `σ` as 1-based index lists and generators and entries
/// as exponent vectors.
pub fn resolution_json(res: &GradedResolution) -> Value {
    let positions: Vec<Value> = (1..=res.length())
        .map(|i| {
            let basis: Vec<Value> = res
                .basis(i)
                .iter()
                .map(|b| json!({ "sigma": b.sigma.iter().map(|s| s + 1).collect::<Vec<_>>(), "gen": b.generator.exponents() }))
                .collect();
            json!({ "position": i, "basis": basis })
        })
        .collect();
    let maps: Vec<Value> = res
        .maps()
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let entries: Vec<Value> = m
                .entries
                .iter()
                .map(|e| json!({ "row": e.row, "col": e.col, "sign": e.sign, "mono": e.mono.exponents() }))
                .collect();
            json!({ "from": i + 1, "to": i, "rows": m.rows, "cols": m.cols, "entries": entries })
        })
        .collect();
    let twists: Vec<Vec<i64>> = res.twists().iter().map(|t| t.iter().map(|&j| -i64::from(j)).collect()).collect();
    json!({
        "construction": res.construction(),
        "n": res.n(),
        "generators": res.generators().iter().map(|g| g.exponents()).collect::<Vec<_>>(),
        "sets": res.sets().iter().map(one_based).collect::<Vec<_>>(),
        "ranks": res.ranks(),
        "twists": twists,
        "positions": positions,
        "maps": maps,
    })
}

/// Verification outcome together with the numerator comparison.
pub fn verification_json(res: &GradedResolution, report: &VerificationReport, k_polynomial: &crate::IntPoly) -> Value {
    let numerator = hilbert_numerator(res);
    json!({
        "passed": report.passed() && &numerator == k_polynomial,
        "checks": report,
        "hilbert_numerator": numerator,
        "k_polynomial": k_polynomial,
    })
}
