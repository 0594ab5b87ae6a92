//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails. All comparisons are exact.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use equihodge::ehrhart::{box_character, compute_phi, denominator, interior_series, DEFAULT_BUFFER};
use equihodge::hodge::{hodge_diamond, quotient_diamond, HodgeContext};
use equihodge::mirror::{face_fan_toric_e, fermat, predicted_mirror_diamond, quintic_mirror};
use equihodge::{ClassFunction, InvariantPolytope, Subgroup};
use num_rational::Ratio;

#[derive(Default)]
struct Checks {
    count: usize,
    failures: Vec<String>,
    note: Option<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn quintic_diamond(c: &mut Checks) {
    let bundle = quintic_mirror().unwrap();
    let diamond = hodge_diamond(&bundle.pair.polytope).unwrap();
    c.check(bundle.mu.degree() == 101, || format!("dim mu = {}", bundle.mu.degree()));
    c.check(bundle.pair.group().num_classes() == 7, || "Sym_5 should have 7 classes".into());
    for (&(p, q), expected) in &bundle.expected_diamond {
        let got = diamond.get(p, q);
        c.check(got == expected, || format!("H^({p},{q}) = {got:?}, expected {expected:?}"));
    }
}

fn quintic_quotients(c: &mut Checks) {
    let bundle = quintic_mirror().unwrap();
    let ip = &bundle.pair.polytope;
    let diamond = hodge_diamond(ip).unwrap();
    let det = ip.group().det_character();
    let a5 = Subgroup::kernel_of(&det).unwrap();
    c.check(a5.order() == 60, || format!("|ker det| = {}", a5.order()));

    let primal = quotient_diamond(&diamond, &a5).unwrap();
    let got = (primal.get(1, 1), primal.get(2, 1));
    c.check(got == bundle.expected_quotients[0], || format!("primal quotient (h11, h21) = {got:?}"));
    c.check(primal.is_symmetric(), || "primal quotient diamond not symmetric".into());

    let predicted = predicted_mirror_diamond(&diamond, &det);
    for (&(p, q), expected) in &bundle.expected_mirror {
        let got = predicted.diamond.get(p, q);
        c.check(got == expected, || format!("predicted H^({p},{q}) = {got:?}"));
    }
    let mirror = quotient_diamond(&predicted.diamond, &a5).unwrap();
    let got = (mirror.get(1, 1), mirror.get(2, 1));
    c.check(got == bundle.expected_quotients[1], || format!("mirror quotient (h11, h21) = {got:?}"));
}

/// Multiplicities of `1`, `sgn`, `ζ` by the displayed closed formula.
fn curve_formula(m: i64) -> [Ratio<i64>; 3] {
    let r = |a: i64, b: i64| Ratio::new(a, b);
    let nu2 = i64::from(m % 2 == 0);
    let nu3 = i64::from(m % 3 == 0);
    [
        r((m - 1) * (m - 5), 12) + r(nu2, 4) + r(nu3, 3),
        r(m * m - 1, 12) - r(nu2, 4) + r(nu3, 3),
        r((m - 1) * (m - 2), 6) - r(nu3, 3),
    ]
}

fn fermat_curves(c: &mut Checks) {
    for m in 3..=6 {
        let bundle = fermat(2, m).unwrap();
        let g = bundle.input.group();
        let diamond = hodge_diamond(&bundle.input).unwrap();
        let h10 = diamond.get(1, 0);
        // 3 cycles for the identity, 2 for a transposition, 1 for a 3-cycle
        let ct = g.cycle_types();
        let at = |f: &dyn Fn(usize) -> i64| ClassFunction::from_classes(g, |k| f(ct[k].len()));
        let irreps = [
            g.trivial_character(),
            g.det_character(),
            at(&|cycles| match cycles {
                3 => 2,
                2 => 0,
                _ => -1,
            }),
        ];
        let got: Vec<Ratio<i64>> = irreps.iter().map(|chi| h10.inner(chi)).collect();
        let expected = curve_formula(m);
        c.check(got == expected, || format!("m={m}: H^(1,0) multiplicities {got:?}, formula {expected:?}"));
        let genus = got[0];
        c.check((genus == Ratio::from(0)) == (m <= 5), || format!("m={m}: quotient genus {genus}"));
    }
    c.check(curve_formula(3) == [0.into(), 1.into(), 0.into()], || "formula at m=3".into());
    c.check(curve_formula(4) == [0.into(), 1.into(), 1.into()], || "formula at m=4".into());
}

fn fermat_traces(c: &mut Checks) {
    let ctx = HodgeContext::default();
    for d in 1..=4 {
        for m in 1..=6 {
            let bundle = fermat(d, m).unwrap();
            let prim = ctx.primitive_hodge(&bundle.input).unwrap();
            for (p, (got, expected)) in prim.iter().zip(&bundle.expected_primitive).enumerate() {
                c.check(got == expected, || {
                    format!("d={d} m={m} p={p}: {got:?}, trace formula {expected:?}")
                });
            }
        }
    }
}

fn standard_simplices(c: &mut Checks) {
    for d in 1..=5 {
        let bundle = fermat(d, 1).unwrap();
        let phi = compute_phi(&bundle.input, DEFAULT_BUFFER);
        let g = bundle.input.group();
        c.check(phi.diagnostics.is_polynomial, || format!("d={d}: not a polynomial"));
        c.check(phi.coefficient(0) == g.trivial_character(), || format!("d={d}: phi_0 = {:?}", phi.coefficient(0)));
        for i in 1..=d + 1 {
            c.check(phi.coefficient(i).is_zero(), || format!("d={d}: phi_{i} = {:?}", phi.coefficient(i)));
        }
    }
}

fn corpus() -> Vec<InvariantPolytope> {
    common::random_simplices(0x5eed, 24)
}

fn box_oracle(c: &mut Checks) {
    let corpus = corpus();
    let nontrivial = corpus.iter().filter(|ip| ip.group().order() > 1).count();
    c.check(nontrivial >= 12, || format!("only {nontrivial} simplices with symmetry"));
    let mut orders: Vec<usize> = corpus.iter().map(|ip| ip.group().order()).collect();
    orders.sort_unstable();
    let dims: Vec<usize> = (1..=3).map(|d| corpus.iter().filter(|ip| ip.dim() == d).count()).collect();
    c.note = Some(format!("{} simplices, per dimension {dims:?}, group orders {orders:?}", corpus.len()));
    for (k, ip) in corpus.iter().enumerate() {
        c.check(ip.group().order() <= 24, || format!("simplex {k}: group too large"));
        let phi = compute_phi(ip, DEFAULT_BUFFER);
        c.check(phi.diagnostics.is_polynomial, || format!("simplex {k}: phi not polynomial"));
        for i in 0..=ip.dim() + 1 {
            let boxed = box_character(ip, i, false).unwrap();
            c.check(phi.coefficient(i) == boxed, || {
                format!("simplex {k} height {i}: phi {:?} box {boxed:?}", phi.coefficient(i))
            });
        }
    }
}

fn reciprocity(c: &mut Checks) {
    let mut all: Vec<(String, InvariantPolytope)> =
        corpus().into_iter().enumerate().map(|(k, ip)| (format!("simplex {k}"), ip)).collect();
    all.extend(common::reflexive_fixtures().into_iter().map(|(n, ip)| (n.to_string(), ip)));
    let mut reflexive_seen = 0;
    for (name, ip) in &all {
        let d = ip.dim();
        let g = ip.group();
        let phi = compute_phi(ip, DEFAULT_BUFFER);
        let order = d + 1 + DEFAULT_BUFFER;
        let series = interior_series(ip, order);
        for cls in 0..g.num_classes() {
            let den = denominator(&g.element(g.class_rep(cls)).linear);
            for k in 0..=order {
                let lhs: i64 = (0..=k.min(den.len() - 1))
                    .map(|j| den[j] * series.coefficients[k - j].at_class(cls))
                    .sum();
                let rhs = if (1..=d + 1).contains(&k) { phi.coefficient(d + 1 - k).at_class(cls) } else { 0 };
                c.check(lhs == rhs, || format!("{name}: class {cls} t^{k}: {lhs} vs {rhs}"));
            }
        }
        let palindromic = (0..=d).all(|i| phi.coefficient(i) == phi.coefficient(d - i));
        let reflexive = ip.polytope().classify().reflexive.is_reflexive();
        reflexive_seen += usize::from(reflexive);
        c.check(palindromic == reflexive, || {
            format!("{name}: palindromic {palindromic}, reflexive {reflexive}")
        });
    }
    c.check(reflexive_seen >= 7, || format!("only {reflexive_seen} reflexive fixtures"));
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn hodge_structure(c: &mut Checks) {
    let fixtures: Vec<(&str, InvariantPolytope)> = vec![
        ("quartic curve", fermat(2, 4).unwrap().input),
        ("quartic K3", fermat(3, 4).unwrap().input),
        ("quintic", fermat(4, 5).unwrap().input),
        ("square", common::square_d4()),
        ("cube", common::cube_full()),
    ];
    for (name, ip) in &fixtures {
        let ctx = HodgeContext::default();
        let g = ip.group();
        let n = ip.dim() - 1;
        let e = ctx.hypersurface_e(ip).unwrap();
        let phi = compute_phi(ip, DEFAULT_BUFFER);
        let det = g.det_character();
        c.check(e.is_symmetric(), || format!("{name}: E(X°) not symmetric"));
        for (&(p, q), v) in e.terms() {
            let allowed = p + q <= n || (p == q && *v == g.exterior_character(n - p).scale(sign(n - p)));
            c.check(allowed && p <= n && q <= n, || format!("{name}: unexpected e^({p},{q}) = {v:?}"));
        }
        for p in 0..=n {
            if 2 * p > n {
                let gysin = g.exterior_character(n - p).scale(sign(n - p));
                c.check(e.get(p, p) == gysin, || format!("{name}: Gysin diagonal at {p}"));
            }
            let total = &g.exterior_character(n - p).scale(sign(n - p)) + &(&det * &phi.coefficient(p + 1)).scale(sign(n));
            c.check(e.row_sum(p) == total, || format!("{name}: row {p} sums to {:?}, expected {total:?}", e.row_sum(p)));
        }

        let diamond = ctx.hodge_diamond(ip).unwrap();
        let compact = diamond.e_polynomial();
        c.check(compact.satisfies_poincare(n), || format!("{name}: compact E fails the functional equation"));
        let stratified = ctx.stratified_e(ip).unwrap();
        c.check(stratified == compact.transfer(stratified.group()), || format!("{name}: stratified sum differs"));

        let dims = diamond.dimensions();
        match *name {
            "quartic curve" => c.check(dims[&(1, 0)] == 3, || format!("quartic genus {}", dims[&(1, 0)])),
            "quartic K3" => {
                c.check(dims[&(1, 1)] == 20, || format!("K3 h11 = {}", dims[&(1, 1)]));
                c.check(dims[&(2, 0)] == 1, || format!("K3 h20 = {}", dims[&(2, 0)]));
            }
            "quintic" => {
                c.check(dims[&(2, 1)] == 101, || format!("quintic h21 = {}", dims[&(2, 1)]));
                c.check(dims[&(1, 1)] == 1, || format!("quintic h11 = {}", dims[&(1, 1)]));
            }
            _ => {}
        }
    }
}

fn two_points(c: &mut Checks) {
    let ip = common::segment_with_inversion();
    let g = ip.group();
    let e = HodgeContext::default().hypersurface_e(&ip).unwrap();
    // x^{-1} - 3 + x = 0 has roots (3 ± √5) / 2, and x ↦ 1/x swaps them
    let roots = [(3.0 + 5f64.sqrt()) / 2.0, (3.0 - 5f64.sqrt()) / 2.0];
    let oracle = ClassFunction::from_fn(g, |el| {
        let inverting = el.linear[0][0] == -1;
        roots
            .iter()
            .filter(|&&r| {
                let image = if inverting { 1.0 / r } else { r };
                (image - r).abs() < 1e-9
            })
            .count() as i64
    });
    c.check(oracle.values() == [2, 0], || format!("oracle {oracle:?}"));
    c.check(e.get(0, 0) == oracle, || format!("e^(0,0) = {:?}", e.get(0, 0)));
    c.check(e.terms().len() == 1, || format!("extra terms {:?}", e.terms()));
}

fn reflexive_phi_is_toric(c: &mut Checks) {
    for (name, ip) in [("triangle", common::reflexive_triangle()), ("segment", common::segment_with_inversion())] {
        let phi = compute_phi(&ip, DEFAULT_BUFFER);
        let toric = face_fan_toric_e(&ip).unwrap();
        for i in 0..=ip.dim() {
            c.check(phi.coefficient(i) == toric.get(i, i), || {
                format!("{name}: phi_{i} = {:?}, e^({i},{i}) = {:?}", phi.coefficient(i), toric.get(i, i))
            });
        }
        c.check(toric.terms().keys().all(|&(p, q)| p == q), || format!("{name}: off-diagonal toric terms"));
    }
    let triangle = common::reflexive_triangle();
    c.check(triangle.group().order() == 6, || "triangle group order".into());
}

fn main() {
    let criteria: [(u32, &str, fn(&mut Checks)); 10] = [
        (1, "quintic equivariant diamond", quintic_diamond),
        (2, "quintic quotient and mirror diamonds", quintic_quotients),
        (3, "Fermat curves H^(1,0) multiplicities", fermat_curves),
        (4, "Fermat trace formula, d <= 4, m <= 6", fermat_traces),
        (5, "phi = 1 for standard simplices, d <= 5", standard_simplices),
        (6, "box oracle on random invariant simplices", box_oracle),
        (7, "reciprocity and palindromes", reciprocity),
        (8, "Hodge-Deligne structure", hodge_structure),
        (9, "d = 1 root-pair oracle", two_points),
        (10, "reflexive phi equals face-fan toric diagonal", reflexive_phi_is_toric),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        let start = Instant::now();
        let mut checks = Checks::default();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut checks)));
        let secs = start.elapsed().as_secs_f64();
        let status = match &outcome {
            Ok(()) if checks.failures.is_empty() => "PASS",
            _ => "FAIL",
        };
        println!(
            "criterion {n:>2} {status}  {name}  (tolerance 0, {} exact checks, {secs:.1}s)",
            checks.count
        );
        if let Some(note) = &checks.note {
            println!("    {note}");
        }
        if status == "FAIL" {
            failed += 1;
            if outcome.is_err() {
                println!("    panicked");
            }
            for f in checks.failures.iter().take(10) {
                println!("    {f}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
