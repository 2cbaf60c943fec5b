//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits non-zero when any criterion fails. Everything is exact.

use std::process::{Command, ExitCode};

use lieconf::catalog::{default_instances, half_lambda_condition, instantiate, Instance, Params};
use lieconf::conformal::{conformal_space, trace_identity};
use lieconf::document::InstanceDocument;
use lieconf::exact::{int, rat, Matrix, Rational, Subspace};
use lieconf::geometry::{curvature, levi_civita, scalar_curvature};
use lieconf::lie::{unit, LieAlgebra};
use lieconf::metric::{CausalCharacter, PseudoMetric};
use lieconf::random;
use lieconf::verify::{verify_bounds_nonunimodular, verify_degenerate_restriction};
use lieconf::yamabe::{soliton_from_conformal, SolitonClass};
use num_traits::Zero;

#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn rat(&mut self, label: &str, got: Rational, want: Rational) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got}, want {want}"));
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{label}: got {got:?}, want {want:?}"));
        }
    }
}

fn params(pairs: &[(&str, Rational)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn span(n: usize, vs: &[&[Rational]]) -> Subspace {
    Subspace::span(n, vs.iter().map(|v| v.to_vec()).collect())
}

fn criterion_1(out: &mut Outcome) {
    let inst = instantiate("affine2", &Params::new()).unwrap();
    let (g, m) = (&inst.algebra, &inst.metric);
    let c = conformal_space(g, m).unwrap();
    out.eq("conformal space", c.space().clone(), span(3, &[&[int(1), int(0), rat(-1, 2)]]));
    out.eq("killing space dim", c.killing_space().dim(), 0);
    out.eq(
        "causal character of e1",
        m.causal_character(&unit(2, 0)).unwrap(),
        CausalCharacter::Lightlike,
    );
    out.rat("scalar curvature", scalar_curvature(g, m).unwrap(), int(0));
    let s = soliton_from_conformal(g, m, &unit(2, 0), &rat(-1, 2)).unwrap();
    out.rat("lambda", s.lambda, rat(1, 2));
    out.eq("class", s.class, SolitonClass::Shrinking);
    out.eq("trivial", s.trivial, false);
}

/// The proof's displayed matrix `L_X g − 2ρg` for the dimension-3 normal form,
/// evaluated entry by entry.
fn proof_matrix(a: &Rational, b: &Rational, c: &Rational, d: &Rational, x: &[Rational; 3], rho: &Rational) -> [Rational; 6] {
    let two = int(2);
    [
        &two * (&x[2] * a - rho),
        &x[2] * c,
        -(&x[0] * a) - &x[2] * b,
        Rational::zero(),
        -(&x[2] * d) + &two * rho,
        &two * (&x[0] * b + &x[1] * d),
    ]
}

/// Scans `x₁ = 1`, `x₂, x₃, ρ ∈ {k/4 : |k| ≤ 16}` for zeros of the proof matrix.
fn brute_force_directions(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Vec<[Rational; 4]> {
    let grid: Vec<Rational> = (-16..=16).map(|k| rat(k, 4)).collect();
    let mut hits = Vec::new();
    for x2 in &grid {
        for x3 in &grid {
            for rho in &grid {
                let x = [int(1), x2.clone(), x3.clone()];
                if proof_matrix(a, b, c, d, &x, rho).iter().all(Zero::is_zero) {
                    hits.push([int(1), x2.clone(), x3.clone(), rho.clone()]);
                }
            }
        }
    }
    hits
}

fn criterion_2(out: &mut Outcome) {
    let inst = instantiate("nonuni3", &params(&[("alpha", int(1)), ("beta", int(0))])).unwrap();
    let c = conformal_space(&inst.algebra, &inst.metric).unwrap();
    out.eq("beta=0 conformal space", c.space().clone(), span(4, &[&[int(0), int(0), int(1), int(1)]]));

    let (a, b, d) = (int(1), int(1), int(2));
    let inst = instantiate("nonuni3", &params(&[("alpha", a.clone()), ("beta", b.clone())])).unwrap();
    let c = conformal_space(&inst.algebra, &inst.metric).unwrap();
    out.eq("beta=1 conformal dim", c.dim(), 1);
    let v = &c.space().basis()[0];
    out.check(!v[0].is_zero(), || format!("beta=1 direction has x1 = 0: {v:?}"));
    if v[0].is_zero() {
        return;
    }
    let x1 = v[0].clone();
    out.rat("x2/x1", &v[1] / &x1, -(&b / &d));
    out.rat("x3/x1", &v[2] / &x1, -(&d / (int(2) * &b)));

    let hits = brute_force_directions(&a, &b, &int(0), &d);
    out.eq("oracle solution count on grid", hits.len(), 1);
    if let Some(h) = hits.first() {
        out.rat("oracle x2", h[1].clone(), &v[1] / &x1);
        out.rat("oracle x3", h[2].clone(), &v[2] / &x1);
        out.rat("rho/x1 against oracle", &v[3] / &x1, h[3].clone());
    }
}

fn criterion_3(out: &mut Outcome) {
    for alpha in [int(0), rat(1, 2), int(1), int(2)] {
        let inst = instantiate("damekricci4", &params(&[("alpha", alpha.clone())])).unwrap();
        let (g, m) = (&inst.algebra, &inst.metric);
        let c = conformal_space(g, m).unwrap();
        out.eq(
            &format!("alpha={alpha} conformal space"),
            c.space().clone(),
            span(5, &[&[int(0), int(0), int(0), int(1), rat(-1, 2)]]),
        );
        let expected = &alpha * (int(1) - &alpha) / int(2);
        let r = scalar_curvature(g, m).unwrap();
        out.rat(&format!("alpha={alpha} scalar curvature"), r.clone(), expected.clone());
        for (x, rho) in c.solutions() {
            let s = soliton_from_conformal(g, m, x, rho).unwrap();
            out.eq(
                &format!("alpha={alpha} trivial iff lambda = alpha(1-alpha)/2"),
                s.trivial,
                s.lambda == expected,
            );
        }
    }
}

fn unimodular_instances(seed: u64, per_signature: usize) -> Vec<(String, LieAlgebra, PseudoMetric)> {
    let mut rng = random::rng(seed);
    let mut algebras: Vec<(String, LieAlgebra)> = (2..=4)
        .map(|n| (format!("abelian{n}"), LieAlgebra::abelian(n)))
        .collect();
    for name in ["heisenberg3", "so3", "sl2"] {
        algebras.push((name.into(), instantiate(name, &Params::new()).unwrap().algebra));
    }
    let mut out = Vec::new();
    for (name, g) in algebras {
        let n = g.dim();
        for q in 0..=n {
            for k in 0..per_signature {
                let m = random::metric_with_signature(&mut rng, n - q, q);
                out.push((format!("{name} ({},{q}) #{k}", n - q), g.clone(), m));
            }
        }
    }
    out
}

fn criterion_4(out: &mut Outcome) {
    for (label, g, m) in unimodular_instances(4, 50) {
        let c = conformal_space(&g, &m).unwrap();
        out.check(c.rho_form().iter().all(Zero::is_zero), || {
            format!("{label}: nonzero rho projection")
        });
        check_trace_identity(out, &label, &g, &m);
    }
    for inst in default_instances() {
        check_trace_identity(out, &inst.label(), &inst.algebra, &inst.metric);
    }
    let mut rng = random::rng(44);
    for k in 0..100 {
        let n = 1 + k % 4;
        let (g, m) = random::instance(&mut rng, n);
        check_trace_identity(out, &format!("random #{k}"), &g, &m);
    }
}

fn check_trace_identity(out: &mut Outcome, label: &str, g: &LieAlgebra, m: &PseudoMetric) {
    let c = conformal_space(g, m).unwrap();
    for (x, rho) in c.solutions() {
        let t = trace_identity(g, m, x, rho).unwrap();
        let n_rho = int(g.dim() as i64) * rho;
        let tr = g.ad_trace(x).unwrap();
        out.check(t.holds() && n_rho == -tr.clone(), || {
            format!("{label}: n rho = {n_rho}, tr ad_X = {tr}, orthogonal sum = {}", t.orthogonal_sum)
        });
    }
}

fn criterion_5(out: &mut Outcome) {
    let mut nonkilling = 0;
    for inst in default_instances().iter().chain(&grid_instances()) {
        let (g, m) = (&inst.algebra, &inst.metric);
        if !conformal_space(g, m).unwrap().nonkilling_exists() {
            continue;
        }
        nonkilling += 1;
        let label = inst.label();
        let b = verify_bounds_nonunimodular(g, m).unwrap();
        out.check(b.is_pass(), || format!("{label}: bounds {b:?}"));
        let k = m.signature().min_pq();
        out.check(g.center().dim() <= k, || format!("{label}: dim C > min(p,q)"));
        out.check(g.commutator_ideal().dim() + k >= g.dim(), || {
            format!("{label}: dim [g,g] < n - min(p,q)")
        });
        let d = verify_degenerate_restriction(g, m).unwrap();
        out.check(d.is_pass(), || format!("{label}: degenerate restriction {d:?}"));
        out.check(m.restriction_degenerate(&g.commutator_ideal()).unwrap(), || {
            format!("{label}: metric on [g,g] is non-degenerate")
        });
    }
    out.check(nonkilling >= 10, || format!("only {nonkilling} non-Killing instances exercised"));
}

const GRID: [(i64, i64); 4] = [(1, 1), (2, 1), (-1, 1), (1, 2)];

/// Every `(λ_1..λ_{n−1})` over the value grid with `Σλ ≠ 0`.
fn lambda_grid(n: usize) -> Vec<Vec<Rational>> {
    let mut all: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 1..n {
        all = all
            .into_iter()
            .flat_map(|prefix| {
                GRID.iter().map(move |&(p, q)| {
                    let mut v = prefix.clone();
                    v.push(rat(p, q));
                    v
                })
            })
            .collect();
    }
    all.retain(|ls| !ls.iter().sum::<Rational>().is_zero());
    all
}

fn grid_params(n: usize, ls: &[Rational], graded: bool) -> Params {
    let mut p = params(&[("n", int(n as i64))]);
    for (i, l) in ls.iter().enumerate() {
        p.insert(format!("lambda{}", i + 1), l.clone());
    }
    if graded {
        for i in 0..n - 2 {
            for j in i + 1..n - 2 {
                let allowed = &ls[i] + &ls[j] == ls[n - 2];
                p.insert(format!("beta{}_{}", i + 1, j + 1), if allowed { int(1) } else { int(0) });
            }
        }
    }
    p
}

fn grid_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 3..=5 {
        for ls in lambda_grid(n).into_iter().step_by(7) {
            for (family, graded) in [("diagonalN", false), ("gradedN", true)] {
                out.push(instantiate(family, &grid_params(n, &ls, graded)).unwrap());
            }
        }
    }
    out
}

fn criterion_6(out: &mut Outcome) {
    for n in 3..=6 {
        let mut positives = 0;
        for ls in lambda_grid(n) {
            for (family, graded) in [("diagonalN", false), ("gradedN", true)] {
                let inst = instantiate(family, &grid_params(n, &ls, graded)).unwrap();
                let (g, m) = (&inst.algebra, &inst.metric);
                let nk = conformal_space(g, m).unwrap().nonkilling_exists();
                let expected = half_lambda_condition(&ls);
                positives += usize::from(nk);
                out.check(nk == expected, || {
                    format!("{}: nonkilling_exists = {nk}, half-lambda condition = {expected}", inst.label())
                });
                if graded {
                    check_graded_identity(out, &inst.label(), g, &ls);
                }
            }
        }
        out.check(positives > 0, || format!("n={n}: grid never meets the half-lambda condition"));
    }
}

/// `[e_n, [e_i, e_j]] = (λ_i + λ_j)[e_i, e_j]` for `i, j ≤ n−1`, with `λ` of the
/// derivation read off `ad_{e_n}`.
fn check_graded_identity(out: &mut Outcome, label: &str, g: &LieAlgebra, ls: &[Rational]) {
    let n = g.dim();
    let en = unit(n, n - 1);
    for i in 0..n - 1 {
        for j in 0..n - 1 {
            let b = g.bracket_basis(i, j);
            let lhs = g.bracket(&en, &b).unwrap();
            let rhs: Vec<Rational> = b.iter().map(|c| c * (&ls[i] + &ls[j])).collect();
            out.check(lhs == rhs, || format!("{label}: graded identity fails at ({}, {})", i + 1, j + 1));
        }
    }
}

fn criterion_7(out: &mut Outcome) {
    let mut pairs: Vec<(String, LieAlgebra, PseudoMetric)> = default_instances()
        .into_iter()
        .map(|i| (i.label(), i.algebra, i.metric))
        .collect();
    let mut rng = random::rng(7);
    for k in 0..100 {
        let n = 1 + k % 4;
        let (g, m) = random::instance(&mut rng, n);
        pairs.push((format!("random #{k} dim {n}"), g, m));
    }
    for (label, g, m) in &pairs {
        geometry_identities(out, label, g, m);
    }
}

fn geometry_identities(out: &mut Outcome, label: &str, g: &LieAlgebra, m: &PseudoMetric) {
    let n = g.dim();
    let conn = levi_civita(g, m).unwrap();
    let curv = curvature(g, m).unwrap();
    let e = |i: usize| unit(n, i);
    for i in 0..n {
        for j in 0..n {
            let torsion: Vec<Rational> = conn
                .get(i, j)
                .iter()
                .zip(conn.get(j, i))
                .zip(g.bracket_basis(i, j))
                .map(|((a, b), c)| a - b - c)
                .collect();
            out.check(torsion.iter().all(Zero::is_zero), || format!("{label}: torsion at ({i},{j})"));
            for k in 0..n {
                let compat = m.inner(conn.get(i, j), &e(k)).unwrap() + m.inner(&e(j), conn.get(i, k)).unwrap();
                out.check(compat.is_zero(), || format!("{label}: metric compatibility at ({i},{j},{k})"));
                let anti: Vec<Rational> =
                    curv.riemann(i, j, k).iter().zip(curv.riemann(j, i, k)).map(|(a, b)| a + b).collect();
                out.check(anti.iter().all(Zero::is_zero), || format!("{label}: R antisymmetry at ({i},{j},{k})"));
                let bianchi: Vec<Rational> = (0..n)
                    .map(|l| &curv.riemann(i, j, k)[l] + &curv.riemann(j, k, i)[l] + &curv.riemann(k, i, j)[l])
                    .collect();
                out.check(bianchi.iter().all(Zero::is_zero), || format!("{label}: first Bianchi at ({i},{j},{k})"));
            }
        }
    }
}

fn criterion_8(out: &mut Outcome) {
    let mut rng = random::rng(8);
    for k in 0..200 {
        let rows = 1 + k % 5;
        let cols = 1 + (k / 5) % 5;
        let a = random::matrix(&mut rng, rows, cols, 3, 3);
        let kern = a.kernel();
        out.eq(&format!("#{k} rank-nullity"), a.rank() + kern.dim(), cols);
        for v in kern.basis() {
            out.check(a.mul_vec(v).unwrap().iter().all(Zero::is_zero), || format!("#{k}: kernel vector not annihilated"));
        }
        let n = rows;
        let sym = random::symmetric(&mut rng, n, 3, 2);
        let s = random::invertible(&mut rng, n);
        let congruent = s.transpose().mul(&sym).unwrap().mul(&s).unwrap();
        out.eq(&format!("#{k} congruence invariance"), congruent.signature().unwrap(), sym.signature().unwrap());
        let sq = random::matrix(&mut rng, n, n, 3, 2);
        if !sq.det().unwrap().is_zero() {
            let inv = sq.inverse().unwrap();
            out.eq(&format!("#{k} exact inverse"), sq.mul(&inv).unwrap(), Matrix::identity(n));
        }
    }
    cli_checks(out);
}

fn run_cli(args: &[&str], stdin: Option<&str>) -> (i32, String) {
    use std::io::Write;
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lieconf"));
    cmd.args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped());
    let mut child = cmd.spawn().expect("spawn cli");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    let output = child.wait_with_output().unwrap();
    (output.status.code().unwrap_or(-1), String::from_utf8(output.stdout).unwrap())
}

fn cli_checks(out: &mut Outcome) {
    for (family, extra) in [("affine2", vec![]), ("nonuni3", vec!["--param", "beta=1"]), ("damekricci4", vec!["--param", "alpha=1/2"])] {
        let mut emit = vec!["catalog", "emit", family];
        emit.extend(&extra);
        let (code, doc) = run_cli(&emit, None);
        out.eq(&format!("{family} emit exit"), code, 0);
        let parsed = InstanceDocument::from_json(&doc).and_then(|d| d.to_instance());
        out.check(parsed.is_ok(), || format!("{family}: emitted document does not parse"));

        let mut direct = vec!["analyze", "--family", family];
        direct.extend(&extra);
        let (c1, a1) = run_cli(&direct, None);
        let (c2, a2) = run_cli(&direct, None);
        let (c3, a3) = run_cli(&["analyze", "-"], Some(&doc));
        out.eq(&format!("{family} analyze exit"), (c1, c2, c3), (0, 0, 0));
        out.check(a1 == a2, || format!("{family}: analyze output not deterministic"));
        out.check(a1 == a3, || format!("{family}: emit -> analyze differs from direct analyze"));
    }
    let (c1, v1) = run_cli(&["verify", "--seed", "3"], None);
    let (c2, v2) = run_cli(&["verify", "--seed", "3"], None);
    out.eq("verify exit", (c1, c2), (0, 0));
    out.check(v1 == v2 && !v1.is_empty(), || "verify output not deterministic".into());
    out.eq("unknown family exit", run_cli(&["analyze", "--family", "nope"], None).0, 2);
    out.eq("constraint exit", run_cli(&["analyze", "--family", "nonuni3", "--param", "alpha=0"], None).0, 2);
    out.eq("malformed input exit", run_cli(&["analyze", "-"], Some("{")).0, 1);
}

type Criterion = fn(&mut Outcome);

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("1 dimension-2 classification (affine2)", criterion_1),
        ("2 dimension-3 classification (nonuni3, oracle rho)", criterion_2),
        ("3 Damek-Ricci family (damekricci4)", criterion_3),
        ("4 unimodular property suite and trace identity", criterion_4),
        ("5 dimension bounds and degenerate [g,g]", criterion_5),
        ("6 diagonal and graded families grid", criterion_6),
        ("7 connection and curvature identities", criterion_7),
        ("8 exact-core invariants and CLI round trip", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let mut out = Outcome::default();
        run(&mut out);
        if out.failures.is_empty() {
            println!("criterion {name}: PASS ({} checks)", out.checks);
        } else {
            failed += 1;
            println!("criterion {name}: FAIL ({} of {} checks)", out.failures.len(), out.checks);
            for f in out.failures.iter().take(8) {
                println!("    {f}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
