//! Acceptance criteria, one test and one PASS/FAIL line per criterion.
//!
//! Fixtures: the F_5 system `{y²−xz, z²−x²y, x+y+z−1}` under lex `x ≻ y ≻ z`
//! and the F_3 sextic `x⁶+x⁵+x⁴+2`.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fqdecomp::gf::Matrix;
use fqdecomp::groebner::{buchberger, Ideal};
use fqdecomp::idem::{invariant_subspace, split_algebra, Subalgebra};
use fqdecomp::mpoly::{Monomial, OrderKind, Polynomial, Ring};
use fqdecomp::oracle::{factor_bruteforce, point_ideal, primitive_idempotents_bruteforce, OracleConfig};
use fqdecomp::primdec::{primary_decomposition, verify, Decomposition};
use fqdecomp::quotient::{macaulay_basis, QuotientBasis};
use fqdecomp::univar::factor;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn system_f5() -> Ideal {
    let r = Ring::new(5, &["x", "y", "z"], OrderKind::Lex).unwrap();
    Ideal::parse(&r, &["y^2-x*z", "z^2-x^2*y", "x+y+z-1"]).unwrap()
}

fn sextic_f3() -> Ideal {
    let r = Ring::new(3, &["x"], OrderKind::Lex).unwrap();
    Ideal::parse(&r, &["x^6+x^5+x^4+2"]).unwrap()
}

fn quotient(i: &Ideal) -> Arc<QuotientBasis> {
    Arc::new(macaulay_basis(i.groebner()).unwrap())
}

fn texts<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn reduced_gb_set(ideals: impl IntoIterator<Item = Ideal>) -> BTreeSet<String> {
    ideals.into_iter().map(|i| i.groebner().to_string()).collect()
}

fn groebner_reproduction() -> Outcome {
    let i = system_f5();
    let gb = buchberger(i.ring(), i.generators());
    let reference = ["x+y+z-1", "y^2+3*y-2*z^4+z^3+2*z^2+z", "y*z+2*y+2*z^4-z^3-z^2-2*z", "z^5-z^4+3*z^3-z^2+2*z"];
    let expected: Vec<String> = reference.iter().map(|s| i.ring().parse(s).unwrap().monic().to_string()).collect();
    ensure!(texts(gb.polys()) == expected, "got {gb}, expected {expected:?}");
    ensure!(gb.is_reduced(), "basis is not reduced");
    Ok(())
}

fn invariant_subspace_of_system() -> Outcome {
    let i = system_f5();
    let qb = quotient(&i);
    let basis: BTreeSet<String> =
        qb.monomials().iter().map(|m| i.ring().term(i.ring().field().elem(1), m.clone()).to_string()).collect();
    let expected: BTreeSet<String> = ["z^4", "z^3", "z^2", "z", "y", "1"].map(String::from).into();
    ensure!(basis == expected, "standard monomials {basis:?}");

    let v = invariant_subspace(&qb);
    ensure!(v.dim() == 4, "dim Ker = {}", v.dim());
    let spanning: Vec<_> = ["1", "z-z^2", "z^2+z^3", "z^3-2*z^4"]
        .iter()
        .map(|s| qb.to_coords(&i.ring().parse(s).unwrap()).coords)
        .collect();
    let reference = Subalgebra::from_vectors(&qb, &spanning);
    ensure!(reference.basis_matrix() == v.basis_matrix(), "row spaces differ");
    Ok(())
}

fn four_components() -> Outcome {
    let i = system_f5();
    let d = primary_decomposition(&i).map_err(|e| e.to_string())?;
    ensure!(d.t() == 4, "t = {}", d.t());
    let r = i.ring();
    let expected = reduced_gb_set([
        Ideal::parse(r, &["z", "y", "x+4"]).unwrap(),
        Ideal::parse(r, &["z+2", "y^2+3*y+1", "x+y+2"]).unwrap(),
        Ideal::parse(r, &["z^2+4*z+2", "y+2*z+1", "x+4*z+3"]).unwrap(),
        Ideal::parse(r, &["z+3", "y+4", "x+2"]).unwrap(),
    ]);
    let got = reduced_gb_set(d.components.iter().map(|c| c.ideal.clone()));
    ensure!(got == expected, "components {got:?}");
    Ok(())
}

fn sextic_factorization() -> Outcome {
    let i = sextic_f3();
    let fz = factor(&i.generators()[0]).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = texts(&fz.factors).into_iter().collect();
    let expected: BTreeSet<String> = ["x+1", "x^2+x+2", "x^3+2*x^2+1"].map(String::from).into();
    ensure!(got == expected, "factors {got:?}");

    let grid = [
        vec![0, 0, 2, 2, 0, 0],
        vec![0, 0, 2, 2, 0, 0],
        vec![2, 1, 0, 0, 1, 0],
        vec![0, 2, 2, 2, 0, 0],
        vec![1, 0, 0, 0, 2, 0],
        vec![0, 2, 1, 1, 0, 0],
    ];
    let qb = quotient(&i);
    let expected = Matrix::from_rows_u64(i.ring().field(), &grid);
    ensure!(qb.frobenius_matrix() == expected, "Frobenius matrix\n{}", qb.frobenius_matrix());
    Ok(())
}

/// Examples plus 50 seeded random point ideals.
fn law_suite() -> Vec<(String, Decomposition)> {
    let mut out = vec![
        ("F_5 system".to_string(), primary_decomposition(&system_f5()).unwrap()),
        ("F_3 sextic".to_string(), primary_decomposition(&sextic_f3()).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let names = ["x", "y", "z"];
    for k in 0..50 {
        let p = [3u64, 5, 7][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=3);
        let order = if rng.gen_bool(0.5) { OrderKind::Lex } else { OrderKind::Grevlex };
        let ring = Ring::new(p, &names[..n], order).unwrap();
        let count = rng.gen_range(1..=4usize).min(p.pow(n as u32) as usize);
        let mut points = BTreeSet::new();
        while points.len() < count {
            points.insert((0..n).map(|_| rng.gen_range(0..p)).collect::<Vec<u64>>());
        }
        let points: Vec<Vec<u64>> = points.into_iter().collect();
        let ideal = point_ideal(&ring, &points).unwrap();
        let d = primary_decomposition(&ideal).unwrap();
        out.push((format!("points #{k} p={p} n={n} {points:?}"), d));
    }
    out
}

fn idempotent_laws(suite: &[(String, Decomposition)]) -> Outcome {
    for (name, d) in suite {
        let qb = &d.quotient;
        let hs = &d.idempotents.elements;
        for (a, h) in hs.iter().enumerate() {
            ensure!(qb.mul(h, h) == *h, "{name}: h_{a}^2 != h_{a}");
            for (b, g) in hs.iter().enumerate().skip(a + 1) {
                ensure!(qb.mul(h, g).is_zero(), "{name}: h_{a} h_{b} != 0");
            }
        }
        let sum = hs.iter().fold(qb.zero(), |acc, h| qb.add(&acc, h));
        ensure!(sum == qb.one(), "{name}: sum of idempotents != 1");
        let kernel_dim = invariant_subspace(qb).dim();
        ensure!(
            d.t() == kernel_dim && kernel_dim == d.components.len(),
            "{name}: t={} dim Ker={} components={}",
            d.t(),
            kernel_dim,
            d.components.len()
        );
    }
    Ok(())
}

fn structural_verifier(suite: &[(String, Decomposition)]) -> Outcome {
    for (name, d) in suite {
        let r = verify(d);
        ensure!(r.intersection_equals_input, "{name}: intersection differs (witness {:?})", r.intersection_witness);
        ensure!(r.comaximal.iter().flatten().all(|&b| b), "{name}: not pairwise comaximal");
        let dims: Option<usize> = r.component_dims.iter().copied().sum();
        ensure!(dims == Some(r.input_dim), "{name}: dim {} vs components {:?}", r.input_dim, r.component_dims);
        ensure!(
            r.component_invariant_dims.iter().all(|&k| k == Some(1)),
            "{name}: component invariant dims {:?}",
            r.component_invariant_dims
        );
    }
    let system = &suite[0].1;
    let mut dims: Vec<usize> = system.components.iter().map(|c| c.quotient_dim().unwrap()).collect();
    dims.sort();
    ensure!(system.quotient.dim() == 6 && dims == [1, 1, 2, 2], "F_5 system dims {dims:?}");
    Ok(())
}

fn idempotent_oracle() -> Outcome {
    for (ideal, size) in [(system_f5(), 625u64), (sextic_f3(), 27)] {
        let qb = quotient(&ideal);
        let v = invariant_subspace(&qb);
        let p = qb.field().modulus();
        ensure!(p.pow(v.dim() as u32) == size, "enumeration size {}", p.pow(v.dim() as u32));
        let mut engine = split_algebra(&v).map_err(|e| e.to_string())?.elements;
        engine.sort();
        let oracle = primitive_idempotents_bruteforce(&v, &OracleConfig::default()).map_err(|e| e.to_string())?;
        ensure!(engine == oracle, "p={p}: engine {engine:?} vs oracle {oracle:?}");
    }
    Ok(())
}

fn monic_polys(ring: &Arc<Ring>, deg: usize) -> impl Iterator<Item = Polynomial> + '_ {
    let p = ring.modulus();
    (0..p.pow(deg as u32)).map(move |mut k| {
        let mut terms = vec![(ring.field().elem(1), Monomial::var(1, 0, deg as u16))];
        for e in 0..deg {
            terms.push((ring.field().elem(k % p), Monomial::var(1, 0, e as u16)));
            k /= p;
        }
        ring.from_terms(terms)
    })
}

fn factoring_oracle() -> Outcome {
    let cfg = OracleConfig::default();
    let mut checked = 0;
    for (p, max_deg) in [(2u64, 6usize), (3, 4)] {
        let ring = Ring::new(p, &["x"], OrderKind::Lex).unwrap();
        for deg in 1..=max_deg {
            for f in monic_polys(&ring, deg) {
                let engine: BTreeSet<String> =
                    texts(&factor(&f).map_err(|e| format!("{f}: {e}"))?.factors).into_iter().collect();
                let oracle: BTreeSet<String> = factor_bruteforce(&f, &cfg)
                    .map_err(|e| format!("{f}: {e}"))?
                    .iter()
                    .map(|(g, m)| g.pow(*m as u64).to_string())
                    .collect();
                ensure!(engine == oracle, "p={p} f={f}: engine {engine:?} vs oracle {oracle:?}");
                checked += 1;
            }
        }
    }
    ensure!(checked == 2 + 4 + 8 + 16 + 32 + 64 + 3 + 9 + 27 + 81, "checked {checked} polynomials");
    Ok(())
}

fn cli_json(args: &[&str]) -> Result<Vec<u8>, String> {
    let text = include_str!("fixtures/system_f5.txt");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fqdecomp").chain(args.iter().copied());
    let code = fqdecomp_cli::run(argv, &mut text.as_bytes(), &mut out, &mut err);
    ensure!(code == 0, "exit {code}: {}", String::from_utf8_lossy(&err));
    Ok(out)
}

fn determinism() -> Outcome {
    let first = cli_json(&["decompose", "--json", "-"])?;
    let second = cli_json(&["decompose", "--json", "-"])?;
    ensure!(first == second, "two runs differ");
    let sequential = cli_json(&["decompose", "--json", "--sequential", "-"])?;
    ensure!(first == sequential, "parallel and sequential runs differ");
    Ok(())
}

/// Runs one criterion, prints its PASS/FAIL line and panics on failure.
/// A criterion that exceeds its time limit fails.
fn criterion(id: usize, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(()), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
        (o, _) => o,
    };
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {id} [{status}] {name} ({:.3}s)", elapsed.as_secs_f64());
    if let Err(msg) = outcome {
        panic!("criterion {id} failed: {msg}");
    }
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

#[test]
fn criterion_1_groebner_basis() {
    criterion(1, "Gröbner basis of the F_5 system", secs(1), groebner_reproduction);
}

#[test]
fn criterion_2_invariant_subspace() {
    criterion(2, "standard monomials and invariant subspace", secs(1), invariant_subspace_of_system);
}

#[test]
fn criterion_3_primary_components() {
    criterion(3, "four primary components", secs(2), four_components);
}

#[test]
fn criterion_4_sextic_factorization() {
    criterion(4, "sextic factorization and Frobenius matrix", secs(1), sextic_factorization);
}

#[test]
fn criterion_5_idempotent_laws() {
    criterion(5, "idempotent laws on 52 decompositions", secs(30), || idempotent_laws(&law_suite()));
}

#[test]
fn criterion_6_structural_verifier() {
    criterion(6, "structural verifier on 52 decompositions", secs(30), || structural_verifier(&law_suite()));
}

#[test]
fn criterion_7_idempotent_oracle() {
    criterion(7, "idempotents agree with exhaustive search", secs(5), idempotent_oracle);
}

#[test]
fn criterion_8_factoring_oracle() {
    criterion(8, "factorizations agree with trial division", secs(60), factoring_oracle);
}

#[test]
fn criterion_9_determinism() {
    criterion(9, "byte-identical JSON across runs and threading", None, determinism);
}
