//! Acceptance suite. Prints one PASS/FAIL line per criterion, with the
//! failing clauses underneath. Criteria whose statement is false as written
//! are listed in `EXPECTED_FAILURES` together with the clause that fails; the
//! binary exits nonzero only when the observed outcomes differ from that list.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use leibniz_cli::commands::{analyze_path, OutputFormat};
use leibniz_cli::corpus_dir;
use leibniz_cli::format::{read_path, AlgebraFile};
use leibniz_cli::report::Sections;
use leibniz_core::classify::{canonical_algebras, classify_dim_le2, is_isomorphism};
use leibniz_core::exactla::vector;
use leibniz_core::levi::levi_decomposition;
use leibniz_core::radicals::{common_null_vector, engel_flag, liezation_preimage_check, radical_report};
use leibniz_core::reps::{check_bimodule_axioms, is_faithful, joint_kernel, Bimodule};
use leibniz_core::structure::{
    commutant, generates, ideal_closure, is_ideal, is_nilpotent_subalgebra, is_solvable, ker_ideal, left_center,
    min_generators, product_subspace, right_center,
};
use leibniz_core::{LeibnizAlgebra, Matrix, Rational, Subspace, Vector};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion number and the clause expected to fail.
const EXPECTED_FAILURES: [(usize, &str); 4] = [
    (2, "right Leibniz fails exactly at (b,b,b)"),
    (3, "printed sign (r_x)^n = (-1)^n r_x (l_x)^(n-1)"),
    (4, "Z^r in N on every corpus algebra"),
    (4, "dim Z^r(L2ii) = 0"),
];

struct Clause {
    text: String,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Criterion {
    clauses: Vec<Clause>,
}

impl Criterion {
    fn check(&mut self, text: impl Into<String>, ok: bool) {
        self.note(text, ok, "");
    }

    fn note(&mut self, text: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.clauses.push(Clause {
            text: text.into(),
            ok,
            detail: detail.into(),
        });
    }

    fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.ok)
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-3i64..=3)), BigInt::from(rng.gen_range(1i64..=3)))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| small_rational(rng)).collect()
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| Rational::from_integer(BigInt::from(rng.gen_range(-2i64..=2))));
        if m.inverse().is_some() {
            return m;
        }
    }
}

fn corpus_algebras() -> Vec<(String, LeibnizAlgebra)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let f = read_path(&p).expect("corpus file parses");
            (f.metadata.name.clone().expect("corpus files are named"), f.algebra)
        })
        .collect()
}

fn corpus_fixtures() -> Vec<(String, AlgebraFile)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(corpus_dir().join("bimodules"))
        .expect("fixture directory")
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let f = read_path(&p).expect("fixture parses");
            (f.metadata.name.clone().expect("fixtures are named"), f)
        })
        .collect()
}

fn within(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).unwrap()
}

fn unit(n: usize, i: usize) -> Vector {
    vector::unit(n, i)
}

fn l_of(alg: &LeibnizAlgebra, x: &[Rational]) -> Matrix {
    alg.left_mult(x).unwrap().matrix
}

fn r_of(alg: &LeibnizAlgebra, x: &[Rational]) -> Matrix {
    alg.right_mult(x).unwrap().matrix
}

fn failing(names: &[String]) -> String {
    if names.is_empty() {
        String::new()
    } else {
        format!("fails on {}", names.join(", "))
    }
}

fn classification() -> Criterion {
    let mut c = Criterion::default();
    let start = Instant::now();
    let one = canonical_algebras(1).unwrap();
    let two = canonical_algebras(2).unwrap();
    c.check("exactly 1 algebra in dim 1", one.len() == 1);
    c.check("exactly 4 algebras in dim 2", two.len() == 4);
    let mut misses = Vec::new();
    for (idx, (name, alg)) in one.iter().chain(two.iter()).enumerate() {
        let mut rng = rng(1000 + idx as u64);
        for trial in 0..20 {
            let p = random_invertible(&mut rng, alg.dim());
            let other = alg.change_basis(&p).unwrap();
            let ok = classify_dim_le2(&other)
                .is_ok_and(|cl| cl.name == *name && is_isomorphism(&other, alg, &cl.isomorphism));
            if !ok {
                misses.push(format!("{name} trial {trial}"));
            }
        }
    }
    c.note("20 random basis changes classify back with verified isomorphisms", misses.is_empty(), failing(&misses));
    let elapsed = start.elapsed();
    c.note("runtime < 1 s", elapsed < Duration::from_secs(1), format!("{elapsed:?}"));
    c
}

fn axiom_asymmetry() -> Criterion {
    let mut c = Criterion::default();
    let l2ii = leibniz_core::catalog::l2ii();
    c.check("L2ii is left Leibniz", l2ii.is_left_leibniz());
    let right = l2ii.check_right_leibniz();
    let names = l2ii.basis_names();
    let found: Vec<String> = right
        .violations
        .iter()
        .map(|v| {
            let w: Vec<&str> = v.witness.iter().map(|&i| names[i].as_str()).collect();
            format!("({}) -> {}", w.join(","), leibniz_cli::report::combination(names, &v.residual))
        })
        .collect();
    let bbb = right
        .violations
        .iter()
        .any(|v| v.witness == [1, 1, 1] && v.residual == vector::from_ints(&[1, 0]));
    c.check("right Leibniz fails at (b,b,b) with residual a", bbb);
    c.note(
        "right Leibniz fails exactly at (b,b,b)",
        found.len() == 1 && bbb,
        format!("violations: {}", found.join("; ")),
    );
    c
}

/// Residuals of `(r_x)^n = sign(n) r_x (l_x)^(n-1)` for basis `x` and `n <= dim`.
fn power_identity_holds(alg: &LeibnizAlgebra, sign: impl Fn(usize) -> i64) -> bool {
    let n = alg.dim();
    (0..n).all(|x| {
        let (l, r) = (l_of(alg, &unit(n, x)), r_of(alg, &unit(n, x)));
        (1..=n).all(|k| {
            let rhs = (&r * &l.pow(k as u32 - 1)).scale(&Rational::from_integer(BigInt::from(sign(k))));
            r.pow(k as u32) == rhs
        })
    })
}

fn identity_suite() -> Criterion {
    let mut c = Criterion::default();
    let corpus = corpus_algebras();
    let mut algebras: Vec<(String, LeibnizAlgebra)> = corpus.clone();
    let small: Vec<_> = corpus.iter().filter(|(_, a)| a.dim() <= 4).collect();
    let mut rng = rng(3);
    for k in 0..50 {
        let (name, alg) = small[k % small.len()];
        let p = random_invertible(&mut rng, alg.dim());
        algebras.push((format!("{name}#{k}"), alg.change_basis(&p).unwrap()));
    }
    let randoms_valid = algebras[corpus.len()..].iter().all(|(_, a)| a.is_left_leibniz());
    c.check("50 random tensors are left Leibniz", randoms_valid && algebras.len() == corpus.len() + 50);
    let mut bad = Vec::new();
    for (name, alg) in &algebras {
        let report = alg.identity_suite();
        if !report.is_empty() {
            bad.push(name.clone());
        }
    }
    c.note(
        "all five identities have zero residuals (power form (-1)^(n-1))",
        bad.is_empty(),
        failing(&bad),
    );
    let printed: Vec<String> = algebras
        .iter()
        .filter(|(_, a)| !power_identity_holds(a, |k| if k % 2 == 0 { 1 } else { -1 }))
        .map(|(n, _)| n.clone())
        .collect();
    c.note(
        "printed sign (r_x)^n = (-1)^n r_x (l_x)^(n-1)",
        printed.is_empty(),
        format!(
            "{} of {} algebras violate it; at n = 1 it reads r_x = -r_x",
            printed.len(),
            algebras.len()
        ),
    );
    let derivable = algebras
        .iter()
        .all(|(_, a)| power_identity_holds(a, |k| if k % 2 == 0 { -1 } else { 1 }));
    c.check("sign (-1)^(n-1) holds for n up to dim", derivable);
    c
}

fn inclusion_lattice() -> Criterion {
    let mut c = Criterion::default();
    let mut failures: [Vec<String>; 6] = Default::default();
    for (name, alg) in corpus_algebras() {
        let r = radical_report(&alg).unwrap();
        let ker = ker_ideal(&alg);
        let full = Subspace::full(alg.dim());
        let checks = [
            within(&ker, &left_center(&alg)),
            within(&ker, &r.nilradical),
            within(&r.nilradical, &r.radical),
            within(&right_center(&alg), &r.nilradical),
            within(&product_subspace(&alg, &full, &r.radical).unwrap(), &r.nilradical),
            within(&product_subspace(&alg, &r.radical, &r.radical).unwrap(), &r.nilradical),
        ];
        for (i, ok) in checks.into_iter().enumerate() {
            if !ok {
                failures[i].push(name.clone());
            }
        }
    }
    let labels = [
        "Ker in Z^l on every corpus algebra",
        "Ker in N on every corpus algebra",
        "N in R on every corpus algebra",
        "Z^r in N on every corpus algebra",
        "[L,R] in N on every corpus algebra",
        "[R,R] in N on every corpus algebra",
    ];
    for (label, bad) in labels.iter().zip(&failures) {
        c.note(*label, bad.is_empty(), failing(bad));
    }
    let l2ii = leibniz_core::catalog::l2ii();
    let (zl, zr) = (left_center(&l2ii).dim(), right_center(&l2ii).dim());
    c.check("dim Z^l(L2ii) = 1", zl == 1);
    c.note(
        "dim Z^r(L2ii) = 0",
        zr == 0,
        format!("Z^r(L2ii) = span{{a - b}} has dim {zr}: [x, a - b] = [x, a] - [x, b] = 0 for x = a, b"),
    );
    c
}

fn preimage_gap() -> Criterion {
    let mut c = Criterion::default();
    let l2ii = leibniz_core::catalog::l2ii();
    let p = liezation_preimage_check(&l2ii).unwrap();
    c.check("preimage of nilradical(L*) is L", p.preimage.is_full());
    c.check("preimage is not nilpotent", !p.preimage_is_nilpotent && !is_nilpotent_subalgebra(&l2ii, &p.preimage).unwrap());
    let a = Subspace::span(2, &[vector::from_ints(&[1, 0])]).unwrap();
    c.check("nilradical(L2ii) = span{a}", p.nilradical == a);
    c.check(
        "nilradical is a nilpotent ideal",
        is_ideal(&l2ii, &a).unwrap() && is_nilpotent_subalgebra(&l2ii, &a).unwrap(),
    );
    // every ideal strictly containing N contains some complement vector
    let maximal = [vector::from_ints(&[0, 1]), vector::from_ints(&[1, 1]), vector::from_ints(&[-1, 2])]
        .iter()
        .all(|v| {
            let bigger = ideal_closure(&l2ii, &a.sum(&Subspace::span(2, std::slice::from_ref(v)).unwrap()).unwrap()).unwrap();
            !is_nilpotent_subalgebra(&l2ii, &bigger).unwrap()
        });
    c.check("maximality probe", maximal);
    let out = analyze_path(&corpus_dir().join("l2ii.json"), &Sections::all(), false, OutputFormat::Json);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let noted = report["warnings"]
        .as_array()
        .unwrap()
        .iter()
        .any(|w| w["code"] == "PreimageDiscrepancy" && w["severity"] == "note");
    c.check("analysis report carries the discrepancy note", noted && out.exit == 0);
    c
}

fn engel() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = rng(6);
    let mut applicable = Vec::new();
    let mut bad = Vec::new();
    for (name, alg) in corpus_algebras() {
        let n = alg.dim();
        if !(0..n).all(|i| l_of(&alg, &unit(n, i)).is_nilpotent()) {
            continue;
        }
        applicable.push(name.clone());
        let Ok(flag) = engel_flag(&alg) else {
            bad.push(format!("{name}: no flag"));
            continue;
        };
        let dims: Vec<usize> = flag.chain().iter().map(Subspace::dim).collect();
        let complete = dims == (0..=n).collect::<Vec<_>>();
        let mut xs: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
        xs.extend((0..5).map(|_| random_vector(&mut rng, n)));
        let triangular = xs.iter().all(|x| {
            flag.in_adapted_basis(&l_of(&alg, x)).is_strictly_upper_triangular()
                && flag.in_adapted_basis(&r_of(&alg, x)).is_strictly_upper_triangular()
        });
        let null = common_null_vector(&alg).is_some_and(|v| {
            !vector::is_zero(&v)
                && (0..n).all(|i| {
                    vector::is_zero(&l_of(&alg, &unit(n, i)).apply(&v)) && vector::is_zero(&r_of(&alg, &unit(n, i)).apply(&v))
                })
        });
        if !(complete && triangular && null) {
            bad.push(name);
        }
    }
    applicable.sort();
    c.note(
        "applicable corpus algebras are a2, abelian1, heis3, l2i",
        applicable == ["a2", "abelian1", "heis3", "l2i"],
        applicable.join(", "),
    );
    c.note("complete flag, all l_x and r_x strictly upper triangular, common null vector", bad.is_empty(), failing(&bad));
    c
}

fn solvability() -> Criterion {
    let mut c = Criterion::default();
    let mut bad = Vec::new();
    for (name, alg) in corpus_algebras() {
        if is_solvable(&alg) != is_nilpotent_subalgebra(&alg, &commutant(&alg)).unwrap() {
            bad.push(name);
        }
    }
    c.note("solvable iff [L,L] nilpotent across the corpus", bad.is_empty(), failing(&bad));
    let sl2 = leibniz_core::catalog::sl2();
    let l2ii = leibniz_core::catalog::l2ii();
    c.check("sl2: both false", !is_solvable(&sl2) && !is_nilpotent_subalgebra(&sl2, &commutant(&sl2)).unwrap());
    c.check("L2ii: both true", is_solvable(&l2ii) && is_nilpotent_subalgebra(&l2ii, &commutant(&l2ii)).unwrap());
    c
}

fn degeneracy() -> Criterion {
    let mut c = Criterion::default();
    let mut rng = rng(8);
    let zero = Rational::from_integer(BigInt::from(0));
    let mut bad = Vec::new();
    for (name, alg) in corpus_algebras() {
        let n = alg.dim();
        let mut xs: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
        xs.extend((0..20).map(|_| random_vector(&mut rng, n)));
        if !xs.iter().all(|x| l_of(&alg, x).determinant() == zero && r_of(&alg, x).determinant() == zero) {
            bad.push(name);
        }
    }
    c.note("det l_x = det r_x = 0 on basis and 20 random x", bad.is_empty(), failing(&bad));
    c
}

fn levi() -> Criterion {
    let mut c = Criterion::default();
    for name in ["sl2_k2", "sl2_plus_l2ii"] {
        let alg = read_path(&corpus_dir().join(format!("{name}.json"))).unwrap().algebra;
        let start = Instant::now();
        let d = levi_decomposition(&alg);
        let elapsed = start.elapsed();
        match d {
            Ok(d) => {
                c.check(format!("{name}: dim S = 3, dim R = 2"), d.semisimple_part.dim() == 3 && d.radical_part.dim() == 2);
                c.check(format!("{name}: all invariants verified, splitting systems consistent"), d.verified.all());
            }
            Err(e) => c.note(format!("{name}: decomposition"), false, e.to_string()),
        }
        c.note(format!("{name}: runtime < 1 s"), elapsed < Duration::from_secs(1), format!("{elapsed:?}"));
    }
    c
}

/// Independent fixed-point closure: add all brackets of spanning vectors
/// until the span stops growing.
fn closure_oracle(alg: &LeibnizAlgebra, start: &Subspace) -> Subspace {
    let mut current = start.clone();
    loop {
        let vs = current.basis_vectors();
        let mut all = vs.clone();
        for u in &vs {
            for v in &vs {
                all.push(alg.bracket(u, v).unwrap());
            }
        }
        let next = Subspace::span(alg.dim(), &all).unwrap();
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

fn generation() -> Criterion {
    let mut c = Criterion::default();
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, alg) in corpus_algebras() {
        let n = alg.dim();
        if n > 3 {
            continue;
        }
        for mask in 0..1usize << n {
            let vs: Vec<Vector> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| unit(n, i)).collect();
            let v = Subspace::span(n, &vs).unwrap();
            count += 1;
            if generates(&alg, &v).unwrap() != closure_oracle(&alg, &v).is_full() {
                bad.push(format!("{name}/{mask:b}"));
            }
        }
    }
    c.note(format!("generates agrees with the closure oracle ({count} subspaces)"), bad.is_empty(), failing(&bad));
    c.check("min_generators(L2i) = 1", min_generators(&leibniz_core::catalog::l2i()) == 1);
    c.check("min_generators(heis3) = 2", min_generators(&leibniz_core::catalog::heis3()) == 2);
    c
}

fn bimodules() -> Criterion {
    let mut c = Criterion::default();
    let mut regular_bad = Vec::new();
    let mut kernel_bad = Vec::new();
    for (name, alg) in corpus_algebras() {
        let reg = Bimodule::regular(&alg);
        if !check_bimodule_axioms(&reg).is_empty() {
            regular_bad.push(name.clone());
        }
        if joint_kernel(&reg) != left_center(&alg).intersect(&right_center(&alg)).unwrap() {
            kernel_bad.push(name);
        }
    }
    c.note("regular bimodule passes the axioms", regular_bad.is_empty(), failing(&regular_bad));
    c.note("joint kernel = Z^l and Z^r intersected", kernel_bad.is_empty(), failing(&kernel_bad));
    let fixtures = corpus_fixtures();
    let mut fixture_bad = Vec::new();
    for (name, file) in &fixtures {
        let ok = file.bimodule().is_some_and(|b| {
            b.is_ok_and(|b| {
                check_bimodule_axioms(&b).is_empty() && is_faithful(&b) && b.carrier_dim() <= b.algebra().dim() + 1
            })
        });
        if !ok {
            fixture_bad.push(name.clone());
        }
    }
    let mut covered: Vec<usize> = fixtures.iter().map(|(_, f)| f.algebra.dim()).filter(|&d| d <= 2).collect();
    covered.sort();
    c.note(
        format!("{} shipped fixtures: faithful, valid, carrier dim <= dim + 1", fixtures.len()),
        fixture_bad.is_empty(),
        failing(&fixture_bad),
    );
    c.check("a fixture for every dim <= 2 corpus algebra", covered == [1, 2, 2, 2, 2]);
    c
}

fn determinism() -> Criterion {
    let mut c = Criterion::default();
    let bin = env!("CARGO_BIN_EXE_leibniz");
    let mut paths: Vec<PathBuf> = Vec::new();
    for dir in [corpus_dir(), corpus_dir().join("bimodules")] {
        paths.extend(
            std::fs::read_dir(dir)
                .unwrap()
                .map(|e| e.unwrap().path())
                .filter(|p| p.extension().is_some_and(|e| e == "json")),
        );
    }
    paths.sort();
    let mut bad = Vec::new();
    for p in &paths {
        let run = || Command::new(bin).arg("analyze").arg(p).output().unwrap();
        let (a, b) = (run(), run());
        let in_process = analyze_path(p, &Sections::all(), false, OutputFormat::Json).stdout;
        if a.stdout != b.stdout || a.stdout != in_process.as_bytes() || a.status.code() != Some(0) {
            bad.push(p.file_name().unwrap().to_string_lossy().into_owned());
        }
    }
    c.note(
        format!("two runs of analyze are byte-identical on {} corpus files", paths.len()),
        bad.is_empty(),
        failing(&bad),
    );
    c
}

fn main() -> ExitCode {
    type Run = fn() -> Criterion;
    let criteria: [(&str, Run); 12] = [
        ("classification completeness", classification),
        ("axiom asymmetry witness", axiom_asymmetry),
        ("identity suite", identity_suite),
        ("inclusion lattice", inclusion_lattice),
        ("nilradical vs liezation preimage", preimage_gap),
        ("Engel flag", engel),
        ("solvability criterion", solvability),
        ("degeneracy", degeneracy),
        ("Levi decomposition", levi),
        ("generation", generation),
        ("bimodules", bimodules),
        ("determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (idx, (title, run)) in criteria.iter().enumerate() {
        let number = idx + 1;
        let c = run();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("[{verdict}] {number:>2}. {title}");
        if c.passed() {
            passed += 1;
        }
        let failed: Vec<&Clause> = c.clauses.iter().filter(|cl| !cl.ok).collect();
        for cl in &failed {
            println!("         failed: {}", cl.text);
            if !cl.detail.is_empty() {
                println!("                 {}", cl.detail);
            }
        }
        let expected: BTreeSet<&str> =
            EXPECTED_FAILURES.iter().filter(|(n, _)| *n == number).map(|(_, t)| *t).collect();
        let observed: BTreeSet<&str> = failed.iter().map(|cl| cl.text.as_str()).collect();
        let observed_expected: BTreeSet<&str> = observed.iter().copied().filter(|t| expected.contains(t)).collect();
        if observed_expected != expected || observed.len() != observed_expected.len() {
            unexpected.push(number);
        }
    }
    println!("acceptance: {passed} of {} criteria pass", criteria.len());
    if unexpected.is_empty() {
        println!("all failures match the documented analysis");
        ExitCode::SUCCESS
    } else {
        println!("outcome differs from the documented analysis for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
