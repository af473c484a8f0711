//! Verification suites, one per acceptance check, shared by `g2 verify` and the
//! acceptance test target.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bethe::{
    admissible_ls, appendix_solution, bae_residual, chain_word, fertility_criterion, is_generic, proportional,
    reproduce, reproduction_chain, BetheData, PolyPair, BAE_TOLERANCE,
};
use crate::diffop::{
    calibrate_h2_scale, exponents_at, expected_exponents_finite, expected_exponents_infinity, fuchs_defect,
    h2_casimir_check, DyInstance, H2_RESIDUE_SCALE,
};
use crate::error::{Error, Result};
use crate::exact::{rat, Point, QPoly};
use crate::repn::{build_g, casimir_spectrum, check_g_relations, check_serre_relations, chevalley, invariant_dim, tensor_decompose};
use crate::rootdata::{casimir_value, Weight};
use crate::sgrass::{
    is_self_dual, reduced_wronski, shift_space, space_wronskian, ssd_witness_check, y_sequence, PolySpace,
    RamificationData,
};
use crate::strat::{covering_degree, enumerate_nontrivial, hasse_diagram, StratumLabel};

/// Arrows of the published d = 11 stratification diagram.
pub const D11_REFERENCE_EDGES: &[(&str, &str)] = &[
    ("((0,1),(0,1),(0,1),(0,1))", "((0,2),(0,1),(0,1))"),
    ("((0,1),(0,1),(0,1),(0,1))", "((1,0),(0,1),(0,1))"),
    ("((0,1),(0,1),(0,1),(0,1))", "((0,1)_1,(0,1),(0,1))"),
    ("((0,1),(0,1),(0,1),(0,1))", "((0,0)_2,(0,1),(0,1))"),
    ("((0,1),(0,1),(0,0)_1,(0,0)_1)", "((0,1)_1,(0,1),(0,0)_1)"),
    ("((0,1),(0,1),(0,0)_1,(0,0)_1)", "((0,0)_2,(0,0)_1,(0,0)_1)"),
    ("((0,1),(0,1),(0,0)_1,(0,0)_1)", "((0,0)_2,(0,1),(0,1))"),
    ("((0,0)_1,(0,0)_1,(0,0)_1,(0,0)_1)", "((0,0)_2,(0,0)_1,(0,0)_1)"),
    ("((0,1),(0,1),(0,1),(0,0)_1)", "((0,1)_1,(0,1),(0,1))"),
    ("((0,1),(0,1),(0,1),(0,0)_1)", "((0,1)_1,(0,1),(0,0)_1)"),
    ("((0,2),(0,1),(0,1))", "((0,2),(0,2))"),
    ("((0,2),(0,1),(0,1))", "((0,1)_2,(0,1))"),
    ("((1,0),(0,1),(0,1))", "((1,0),(1,0))"),
    ("((1,0),(0,1),(0,1))", "((0,1)_2,(0,1))"),
    ("((0,1)_1,(0,1),(0,1))", "((0,1)_2,(0,1))"),
    ("((0,1)_1,(0,1),(0,1))", "((0,1)_1,(0,1)_1)"),
    ("((0,0)_2,(0,1),(0,1))", "((0,1)_2,(0,1))"),
    ("((0,0)_2,(0,1),(0,1))", "((0,0)_2,(0,0)_2)"),
    ("((0,1)_1,(0,1),(0,0)_1)", "((0,1)_2,(0,1))"),
    ("((0,1)_1,(0,1),(0,0)_1)", "((0,1)_1,(0,1)_1)"),
    ("((0,1)_1,(0,1),(0,0)_1)", "((0,0)_3,(0,0)_1)"),
    ("((0,0)_2,(0,0)_1,(0,0)_1)", "((0,0)_2,(0,0)_2)"),
    ("((0,0)_2,(0,0)_1,(0,0)_1)", "((0,0)_3,(0,0)_1)"),
    ("((0,2),(0,2))", "((0,0)_4)"),
    ("((1,0),(1,0))", "((0,0)_4)"),
    ("((0,1)_2,(0,1))", "((0,0)_4)"),
    ("((0,1)_1,(0,1)_1)", "((0,0)_4)"),
    ("((0,0)_2,(0,0)_2)", "((0,0)_4)"),
    ("((0,0)_3,(0,0)_1)", "((0,0)_4)"),
];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Chevalley,
    Casimir,
    AppendixGrid,
    Reproduction,
    KernelSsd,
    Hamiltonian,
    Strata,
    CoveringDegree,
    Wronskian,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Chevalley,
        Suite::Casimir,
        Suite::AppendixGrid,
        Suite::Reproduction,
        Suite::KernelSsd,
        Suite::Hamiltonian,
        Suite::Strata,
        Suite::CoveringDegree,
        Suite::Wronskian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Chevalley => "chevalley",
            Suite::Casimir => "casimir",
            Suite::AppendixGrid => "appendix-grid",
            Suite::Reproduction => "reproduction",
            Suite::KernelSsd => "kernel-ssd",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Strata => "strata",
            Suite::CoveringDegree => "covering-degree",
            Suite::Wronskian => "wronskian",
        }
    }

    /// Position in the acceptance list, from 1.
    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|s| *s == self).unwrap() + 1
    }

    /// Largest weight coordinate swept by the suite (0 when it does not sweep).
    pub fn default_lmax(self) -> i64 {
        match self {
            Suite::AppendixGrid => 5,
            Suite::Reproduction | Suite::KernelSsd | Suite::Hamiltonian | Suite::Wronskian => 3,
            _ => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s || x.number().to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub number: usize,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {} ({}): {} [{} checks, {} ms]",
            self.number, self.suite, status, self.checks, self.millis
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" first failure: {f}"));
        }
        s
    }
}

/// Collects pass/fail outcomes.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn merge(&mut self, o: Tally) {
        self.checks += o.checks;
        self.failures.extend(o.failures);
    }
}

/// Grid bound from the environment (`G2_LMAX`, default 5), capped by the suite's own bound.
pub fn effective_lmax(suite: Suite, env: Option<&str>) -> Result<i64> {
    let cap = match env {
        None => 5,
        Some(v) => v.trim().parse::<i64>().map_err(|_| Error::Parse(format!("G2_LMAX = {v:?} is not an integer")))?,
    };
    if cap < 0 {
        return Err(Error::InvalidInput("G2_LMAX must be nonnegative".into()));
    }
    Ok(suite.default_lmax().min(cap))
}

fn grid(lmax: i64) -> Vec<Weight> {
    (0..=lmax).flat_map(|a| (0..=lmax).map(move |b| Weight(a, b))).collect()
}

/// `(lambda, case)` for every admissible case on the grid.
fn grid_cases(lmax: i64) -> Vec<(Weight, usize)> {
    grid(lmax)
        .into_iter()
        .flat_map(|w| admissible_ls(w).unwrap().into_iter().map(move |i| (w, i)))
        .collect()
}

fn sweep<T: Sync, F: Fn(&T) -> Tally + Sync + Send>(items: &[T], f: F) -> Tally {
    let parts: Vec<Tally> = items.par_iter().map(f).collect();
    let mut t = Tally::default();
    for p in parts {
        t.merge(p);
    }
    t
}

pub fn run_suite(suite: Suite, lmax: i64) -> SuiteReport {
    let start = Instant::now();
    let t = match suite {
        Suite::Chevalley => chevalley_suite(),
        Suite::Casimir => casimir_suite(),
        Suite::AppendixGrid => appendix_suite(lmax),
        Suite::Reproduction => reproduction_suite(lmax),
        Suite::KernelSsd => kernel_suite(lmax),
        Suite::Hamiltonian => hamiltonian_suite(lmax),
        Suite::Strata => strata_suite(),
        Suite::CoveringDegree => covering_suite(),
        Suite::Wronskian => wronskian_suite(lmax),
    };
    SuiteReport {
        suite,
        number: suite.number(),
        passed: t.failures.is_empty() && t.checks > 0,
        checks: t.checks,
        failures: t.failures,
        millis: start.elapsed().as_millis(),
    }
}

fn chevalley_suite() -> Tally {
    let mut t = Tally::default();
    let c = chevalley();
    t.check(check_serre_relations(&c).is_ok(), || "Chevalley relations".into());
    if let Some(g) = t.result(build_g(), || "G table".into()) {
        let r = check_g_relations(&g);
        t.check(r.is_ok(), || format!("G relations: {}", r.unwrap_err()));
    }
    t
}

fn casimir_suite() -> Tally {
    let mut t = Tally::default();
    let Some(g) = t.result(build_g(), || "G table".into()) else { return t };
    let Some(spec) = t.result(casimir_spectrum(&g), || "Casimir spectrum".into()) else { return t };
    let dims: Vec<(Weight, usize)> = spec.iter().map(|(w, (_, d))| (*w, *d)).collect();
    let want = vec![(Weight(0, 0), 1), (Weight(0, 1), 7), (Weight(0, 2), 27), (Weight(1, 0), 14)];
    t.check(dims == want, || format!("multiplicities {dims:?}"));
    for (mu, (ev, _)) in &spec {
        let c = rat(casimir_value(*mu) - 2 * casimir_value(Weight::OMEGA2)) / rat(2);
        t.check(*ev == c, || format!("eigenvalue on {mu}: {ev} vs {c}"));
    }
    let evs: std::collections::BTreeSet<_> = spec.values().map(|(e, _)| e.clone()).collect();
    t.check(evs.len() == 4, || "eigenvalues not distinct".into());
    t
}

fn appendix_suite(lmax: i64) -> Tally {
    sweep(&grid_cases(lmax), |&(lambda, case)| {
        let mut t = Tally::default();
        let tag = || format!("lambda = {lambda}, case {case}");
        let Some(y) = t.result(appendix_solution(lambda, case), tag) else { return t };
        let data = BetheData::two_point(lambda, case);
        t.check(is_generic(&y, &data.weights, &data.points), || format!("{}: not generic", tag()));
        match fertility_criterion(&y, &data) {
            Ok(ok) => t.check(ok, || format!("{}: not fertile", tag())),
            Err(e) => t.check(false, || format!("{}: {e}", tag())),
        }
        match bae_residual(&y, &data.weights, &data.points) {
            Ok(r) => t.check(r < BAE_TOLERANCE, || format!("{}: residual {r:e}", tag())),
            Err(e) => t.check(false, || format!("{}: {e}", tag())),
        }
        t
    })
}

fn reproduction_suite(lmax: i64) -> Tally {
    let items: Vec<(Weight, usize)> = grid_cases(lmax).into_iter().filter(|(_, i)| [1, 2, 4, 5, 6].contains(i)).collect();
    sweep(&items, |&(lambda, case)| {
        let mut t = Tally::default();
        let tag = || format!("lambda = {lambda}, case {case}");
        let word = chain_word(case).unwrap();
        let Some(chain) = t.result(reproduction_chain(lambda, word), tag) else { return t };
        let Some(target) = t.result(appendix_solution(lambda, case), tag) else { return t };
        let last = chain.last().unwrap();
        t.check(last.pair.projectively_eq(&target), || format!("{}: chain ends at {:?}", tag(), last.pair));
        t.check(last.data.l == crate::bethe::CASES[case], || format!("{}: l = {:?}", tag(), last.data.l));
        // reproducing twice in the same direction returns the previous pair
        let theta = word.iter().rev().fold(lambda, |w, &j| crate::rootdata::shifted_reflection(j, w));
        let mut prev = (PolyPair::trivial(), BetheData::two_point(theta, 0));
        for step in &chain {
            match reproduce(&step.pair, step.direction, &step.data) {
                Ok(Some((back, data))) => {
                    t.check(back.projectively_eq(&prev.0) && data.l == prev.1.l, || {
                        format!("{}: y^(j)(j) != y in direction {}", tag(), step.direction)
                    });
                }
                Ok(None) => t.check(false, || format!("{}: second reproduction not generic", tag())),
                Err(e) => t.check(false, || format!("{}: {e}", tag())),
            }
            prev = (step.pair.clone(), step.data.clone());
        }
        t
    })
}

fn ramification(inst: &DyInstance, ks: &[i64]) -> Result<RamificationData> {
    RamificationData::from_weights(inst.data.points.clone(), &inst.data.weights, ks)
}

/// The pattern `(y1, y2, y1^2, y1^2, y2, y1)` up to scalars.
fn matches_bethe_pattern(ys: &[QPoly; 6], y: &PolyPair) -> bool {
    let sq = y.y1.pow(2);
    let want = [&y.y1, &y.y2, &sq, &sq, &y.y2, &y.y1];
    ys.iter().zip(want.iter()).all(|(a, b)| proportional(a, b))
}

fn kernel_suite(lmax: i64) -> Tally {
    sweep(&grid_cases(lmax), |&(lambda, case)| {
        let mut t = Tally::default();
        let tag = || format!("lambda = {lambda}, case {case}");
        let Some(inst) = t.result(DyInstance::new(lambda, case), tag) else { return t };
        let Some(kernel) = t.result(inst.kernel(), tag) else { return t };
        for u in &kernel {
            let img = inst.dy.apply(&crate::diffop::QRatFunc::from_poly(u.clone()));
            t.check(img.is_zero(), || format!("{}: kernel element not annihilated", tag()));
        }
        let Some(x) = t.result(PolySpace::new(kernel), tag) else { return t };
        let Some(r) = t.result(ramification(&inst, &[0, 0]), tag) else { return t };
        t.check(is_self_dual(&x, &r), || format!("{}: not self-dual", tag()));
        t.check(ssd_witness_check(&x, &r, x.flag_basis()), || format!("{}: witness fails", tag()));
        if let Some(ys) = t.result(y_sequence(x.flag_basis(), &r), tag) {
            t.check(matches_bethe_pattern(&ys, &inst.y), || format!("{}: y pattern differs", tag()));
        }
        // exponents of the conjugated operator, and the shift back to D_y
        let Some(dv) = t.result(inst.conjugated(), tag) else { return t };
        let mu = inst.total_weight();
        let points = [(Point::Finite(rat(0)), lambda), (Point::Finite(rat(1)), Weight::OMEGA2)];
        let mut lists = Vec::new();
        for (p, w) in points {
            if let Some(e) = t.result(exponents_at(&dv, &p), tag) {
                t.check(e.exponents == expected_exponents_finite(w), || format!("{}: exponents at {p}", tag()));
                let shift = 2 * w.0 + w.1;
                if let Some(ey) = t.result(exponents_at(&inst.dy, &p), tag) {
                    let shifted: Vec<i64> = e.exponents.iter().map(|v| v + shift).collect();
                    t.check(ey.exponents == shifted, || format!("{}: D_y exponent shift at {p}", tag()));
                }
                lists.push(e);
            }
        }
        if let Some(e) = t.result(exponents_at(&dv, &Point::Infinity), tag) {
            t.check(e.exponents == expected_exponents_infinity(mu), || format!("{}: exponents at inf", tag()));
            let deg = inst.twist().deg();
            if let Some(ey) = t.result(exponents_at(&inst.dy, &Point::Infinity), tag) {
                let shifted: Vec<i64> = e.exponents.iter().map(|v| v - deg).collect();
                t.check(ey.exponents == shifted, || format!("{}: D_y exponent shift at inf", tag()));
            }
            lists.push(e);
        }
        if lists.len() == 3 {
            match fuchs_defect(&dv, &lists) {
                Ok(d) => t.check(d == rat(0), || format!("{}: Fuchs defect {d}", tag())),
                Err(e) => t.check(false, || format!("{}: {e}", tag())),
            }
        }
        t
    })
}

fn hamiltonian_suite(lmax: i64) -> Tally {
    let mut t = Tally::default();
    match calibrate_h2_scale() {
        Ok(s) => t.check(s == rat(H2_RESIDUE_SCALE), || format!("calibration constant {s}")),
        Err(e) => t.check(false, || format!("calibration: {e}")),
    }
    t.merge(sweep(&grid_cases(lmax), |&(lambda, case)| {
        let mut t = Tally::default();
        match h2_casimir_check(lambda, case) {
            Ok(r) => t.check(r.ok, || {
                format!("lambda = {lambda}, case {case}: residue side {} vs eigenvalue {}", r.residue_side, r.eigenvalue_side)
            }),
            Err(e) => t.check(false, || format!("lambda = {lambda}, case {case}: {e}")),
        }
        t
    }));
    t
}

fn strata_suite() -> Tally {
    let mut t = Tally::default();
    let Some(h) = t.result(hasse_diagram(11), || "d = 11".into()) else { return t };
    t.check(h.nodes.len() == 17, || format!("{} nodes", h.nodes.len()));
    let layers: Vec<usize> = h.layers().into_iter().map(|(_, v)| v.len()).collect();
    t.check(layers == vec![4, 6, 6, 1], || format!("layers {layers:?}"));
    let canon = |s: &str| s.parse::<StratumLabel>().map(|l| l.to_string()).unwrap_or_default();
    let want: std::collections::BTreeSet<(String, String)> =
        D11_REFERENCE_EDGES.iter().map(|(a, b)| (canon(a), canon(b))).collect();
    let got: std::collections::BTreeSet<(String, String)> = h.edge_labels().into_iter().collect();
    for e in want.difference(&got) {
        t.check(false, || format!("missing arrow {} -> {}", e.0, e.1));
    }
    for e in got.difference(&want) {
        t.check(false, || format!("extra arrow {} -> {}", e.0, e.1));
    }
    t.check(got.len() == 29, || format!("{} arrows", got.len()));
    let again = hasse_diagram(11).map(|h2| h2.to_dot());
    t.check(again.ok().as_deref() == Some(h.to_dot().as_str()), || "DOT output not stable".into());
    for (d, n) in [(7, 1), (8, 1)] {
        let got = enumerate_nontrivial(d).map(|v| v.len()).unwrap_or(0);
        t.check(got == n, || format!("d = {d}: {got} nodes"));
    }
    t
}

fn covering_suite() -> Tally {
    let mut t = Tally::default();
    for n in 2..=4 {
        let label: StratumLabel = format!("({})", vec!["(0,1)"; n].join(",")).parse().unwrap();
        let inv = invariant_dim(&vec![Weight::OMEGA2; n]).unwrap_or(0);
        match covering_degree(&label) {
            Ok(c) => t.check(c == inv && c > 0, || format!("n = {n}: covering degree {c}, invariants {inv}")),
            Err(e) => t.check(false, || format!("n = {n}: {e}")),
        }
    }
    let cases = admissible_ls(Weight::OMEGA2).map(|v| v.len()).unwrap_or(0);
    let summands = tensor_decompose(Weight::OMEGA2, Weight::OMEGA2).map(|d| d.len()).unwrap_or(0);
    t.check(cases == 4 && summands == 4, || format!("{cases} admissible cases vs {summands} summands"));
    t
}

fn wronskian_suite(lmax: i64) -> Tally {
    sweep(&grid_cases(lmax), |&(lambda, case)| {
        let mut t = Tally::default();
        let tag = || format!("lambda = {lambda}, case {case}");
        let Some(inst) = t.result(DyInstance::new(lambda, case), tag) else { return t };
        let Some(kernel) = t.result(inst.kernel(), tag) else { return t };
        let Some(x) = t.result(PolySpace::new(kernel), tag) else { return t };
        let zs = [rat(0), rat(1)];
        for ks in [[0i64, 0], [1, 2]] {
            let Some(xs) = t.result(shift_space(&x, &zs, &ks), tag) else { continue };
            let mut expected = QPoly::one();
            let mut root = QPoly::one();
            for ((z, w), k) in zs.iter().zip(&inst.data.weights).zip(ks) {
                let e = 2 * w.0 + w.1 + k;
                let lin = QPoly::linear_root(z).pow(e as u32);
                expected = &expected * &lin.pow(7);
                root = &root * &lin;
            }
            t.check(space_wronskian(&xs) == expected, || format!("{}: Wronskian with shift {ks:?}", tag()));
            match reduced_wronski(&xs) {
                Ok(r) => t.check(r == root, || format!("{}: reduced Wronskian {r}", tag())),
                Err(e) => t.check(false, || format!("{}: {e}", tag())),
            }
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(s.number().to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn lmax_from_environment() {
        assert_eq!(effective_lmax(Suite::AppendixGrid, None).unwrap(), 5);
        assert_eq!(effective_lmax(Suite::KernelSsd, None).unwrap(), 3);
        assert_eq!(effective_lmax(Suite::KernelSsd, Some("1")).unwrap(), 1);
        assert!(effective_lmax(Suite::KernelSsd, Some("x")).is_err());
    }

    #[test]
    fn quick_sweeps_pass() {
        for s in [Suite::AppendixGrid, Suite::Reproduction, Suite::KernelSsd, Suite::Hamiltonian, Suite::Wronskian] {
            let r = run_suite(s, 1);
            assert!(r.passed, "{}", r.line());
        }
    }
}
