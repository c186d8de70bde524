//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use common::{random_homogeneous_poly, random_presentation};
use k2ws::cobar::{
    chain_differential, ext_dims, hilbert_euler_product, k2_test, lambda_dim_check,
    lambda_surjectivity_evidence,
};
use k2ws::facecomplex::{face_algebra_presentation, find_good_ordering, betweenness_check};
use k2ws::grassoc::{associated_graded, hilbert_coeffs};
use k2ws::groebner::{complete, essential_groebner_test, leading_monomial_property, EssentialVerdict};
use k2ws::linalg::normalize;
use k2ws::{
    Field, GradedAlgebra, K2Verdict, MonomialAlgebra, Polynomial, Presentation, PrimeField,
    SimplicialComplex, VertexOrdering, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pres(vars: &[&str], rels: &[&str], bound: usize) -> Presentation<PrimeField> {
    Presentation::from_strs(PrimeField::default(), vars, rels, Some(bound)).unwrap()
}

fn words(p: &Presentation<PrimeField>, ws: &[&str]) -> Vec<Word> {
    let mut v: Vec<Word> = ws.iter().map(|w| p.vars().word(w).unwrap()).collect();
    v.sort();
    v
}

fn sorted(mut v: Vec<Word>) -> Vec<Word> {
    v.sort();
    v
}

fn is_evidence(v: &K2Verdict, nmax: usize, bound: usize) -> bool {
    *v == K2Verdict::EvidenceK2UpTo { nmax, bound }
}

fn gr_algebra(p: &Presentation<PrimeField>) -> GradedAlgebra<PrimeField> {
    GradedAlgebra::monomial(*p.field(), associated_graded(&complete(p)))
}

const B: [&str; 3] = ["x^2*y", "y*z^2", "x^3*z"];
const A: [&str; 3] = ["x^2*y - x^3", "y*z^2 - y*x^2", "x^3*z - x^4"];
const XYZ: [&str; 3] = ["x", "y", "z"];
const XY: [&str; 2] = ["x", "y"];

fn leading_monomial_failure() -> Outcome {
    let p = pres(&XY, &["y^2", "x^3 - y^2*x"], 8);
    let (ok, w) = leading_monomial_property(p.relations());
    let w = w.ok_or("no witness")?;
    ensure(!ok, || "property reported as holding".into())?;
    let y2 = p.vars().word("y^2").unwrap();
    let y2x = p.vars().word("y^2*x").unwrap();
    ensure(w.inner_word == y2 && w.outer_word == y2x, || format!("witness {w:?}"))?;
    let g = complete(&p);
    let expect = vec![
        Polynomial::word(p.field(), y2.clone()),
        Polynomial::word(p.field(), p.vars().word("x^3").unwrap()),
    ];
    let mut got = g.elements().to_vec();
    got.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
    let mut expect = expect;
    expect.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
    ensure(got == expect, || format!("basis {got:?}"))?;
    for q in [pres(&XY, &["x^3", "y^2"], 8), p] {
        let v = essential_groebner_test(&q).map_err(|e| e.to_string())?.verdict;
        ensure(v == EssentialVerdict::Yes, || format!("essential {v:?}"))?;
    }
    Ok("witness (y^2, y^2*x), basis {y^2, x^3}, essential Yes".into())
}

fn hilbert_series_example() -> Outcome {
    let p = pres(&XY, &["x*y - x^2", "y*x", "y^3"], 8);
    let gr = associated_graded(&complete(&p));
    let got = sorted(gr.mingens().to_vec());
    ensure(got == words(&p, &["x*y", "y*x", "x^3", "y^3"]), || format!("mingens {got:?}"))?;
    let h = hilbert_coeffs(&gr);
    ensure(h[..3] == [1, 2, 2] && h[3..].iter().all(|c| *c == 0), || format!("hilbert {h:?}"))?;
    let v = essential_groebner_test(&p).map_err(|e| e.to_string())?.verdict;
    ensure(matches!(v, EssentialVerdict::No { .. }), || format!("essential {v:?}"))?;
    let k = k2_test(&gr_algebra(&p), 4, 8).map_err(|e| e.to_string())?;
    ensure(is_evidence(&k, 4, 8), || format!("k2 {k:?}"))?;
    Ok("H = 1 + 2t + 2t^2, essential No, gr evidence (4, 8)".into())
}

fn resolution_dimensions() -> Outcome {
    let f = PrimeField::default();
    let b = GradedAlgebra::monomial(f, MonomialAlgebra::from_strs(&XYZ, &B, 6).unwrap());
    let tb = ext_dims(&b, 4, 6).map_err(|e| e.to_string())?;
    let expect = vec![((0, 0), 1), ((1, 1), 3), ((2, 3), 2), ((2, 4), 1), ((3, 5), 1)];
    ensure(tb.nonzero() == expect, || format!("ext(B) {:?}", tb.nonzero()))?;
    let kb = k2_test(&b, 4, 6).map_err(|e| e.to_string())?;
    ensure(kb.is_certified_not_k2(), || format!("k2(B) {kb:?}"))?;
    let p = pres(&XYZ, &A, 6);
    let v = essential_groebner_test(&p).map_err(|e| e.to_string())?.verdict;
    ensure(v == EssentialVerdict::Yes, || format!("essential(A) {v:?}"))?;
    let ta = ext_dims(&GradedAlgebra::from_presentation(&p), 4, 6).map_err(|e| e.to_string())?;
    ensure(ta.nonzero() == expect, || format!("ext(A) {:?}", ta.nonzero()))?;
    let p8 = pres(&XYZ, &A, 8);
    let ka = k2_test(&GradedAlgebra::from_presentation(&p8), 4, 8).map_err(|e| e.to_string())?;
    ensure(is_evidence(&ka, 4, 8), || format!("k2(A) {ka:?}"))?;
    Ok("ext(B) = ext(A) on n <= 4, j <= 6; B certified not K2; A evidence (4, 8)".into())
}

fn skew_cubic() -> Outcome {
    let p = pres(&XY, &["y*x - x*y", "y^3 + x^2*y"], 8);
    let gr = associated_graded(&complete(&p));
    let got = sorted(gr.mingens().to_vec());
    ensure(got == words(&p, &["y*x", "y^3"]), || format!("gr {got:?}"))?;
    let v = essential_groebner_test(&p).map_err(|e| e.to_string())?.verdict;
    ensure(v == EssentialVerdict::Yes, || format!("essential {v:?}"))?;
    let lift = lambda_surjectivity_evidence(&p, 2, 8).map_err(|e| e.to_string())?;
    ensure(lift.all_lifted() && !lift.classes.is_empty(), || format!("lift {lift:?}"))?;
    let k = k2_test(&gr_algebra(&p), 4, 8).map_err(|e| e.to_string())?;
    ensure(is_evidence(&k, 4, 8), || format!("k2 {k:?}"))?;
    Ok(format!("gr = <yx, y^3>, {} classes lift at n = 2, evidence (4, 8)", lift.classes.len()))
}

fn augmented_example() -> Outcome {
    let p = pres(&XY, &["y*x - x*y", "x^3 - y^2"], 8);
    let g = complete(&p);
    let lw = sorted(g.leading_words());
    ensure(lw == words(&p, &["y*x", "x^3"]), || format!("leading words {lw:?}"))?;
    let t = ext_dims(&gr_algebra(&p), 2, 8).map_err(|e| e.to_string())?;
    ensure(t.total(1) == 2 && t.total(2) == 2, || format!("gr ext {:?}", t.nonzero()))?;
    for n in [1, 2] {
        let r = lambda_surjectivity_evidence(&p, n, 8).map_err(|e| e.to_string())?;
        ensure(r.all_lifted() && r.classes.len() == 2, || format!("lift n = {n}: {r:?}"))?;
    }
    Ok("leading words {yx, x^3}, gr ext totals 2 and 2, all classes lift at n = 1, 2".into())
}

fn grassmann_mod_top() -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4] {
        let start = Instant::now();
        let c = SimplicialComplex::simplex_boundary(n).map_err(|e| e.to_string())?;
        let ord = VertexOrdering::identity(n);
        let p = face_algebra_presentation(PrimeField::default(), &c, &ord, Some(8)).map_err(|e| e.to_string())?;
        let v = essential_groebner_test(&p).map_err(|e| e.to_string())?.verdict;
        ensure(v == EssentialVerdict::Yes, || format!("n = {n}: essential {v:?}"))?;
        let k = k2_test(&gr_algebra(&p), 4, 8).map_err(|e| e.to_string())?;
        ensure(is_evidence(&k, 4, 8), || format!("n = {n}: k2 {k:?}"))?;
        notes.push(format!("n = {n} in {:.1}s", start.elapsed().as_secs_f64()));
    }
    Ok(format!("essential Yes and evidence (4, 8) for {}", notes.join(", ")))
}

fn six_vertex_counterexample() -> Outcome {
    let names = |s: &str| s.split_whitespace().map(str::to_string).collect::<Vec<_>>();
    let facets = ["u x y", "u y z", "u x z", "t u x", "t x z", "u w z", "w x z"].map(names);
    let c = SimplicialComplex::from_facets(names("t u w x y z"), &facets).map_err(|e| e.to_string())?;
    let s = find_good_ordering(&c, 8).map_err(|e| e.to_string())?;
    ensure(s.ordering.is_none() && s.checks == 720, || format!("search {s:?}"))?;
    Ok("no ordering after 720 checks".into())
}

fn golden() -> Vec<(&'static str, GradedAlgebra<PrimeField>)> {
    let f = PrimeField::default();
    let face = |n: usize| {
        let c = SimplicialComplex::simplex_boundary(n).unwrap();
        let p = face_algebra_presentation(f, &c, &VertexOrdering::identity(n), Some(6)).unwrap();
        GradedAlgebra::from_presentation(&p)
    };
    let hs = pres(&XY, &["x*y - x^2", "y*x", "y^3"], 6);
    let sk = pres(&XY, &["y*x - x*y", "y^3 + x^2*y"], 6);
    vec![
        ("B", GradedAlgebra::monomial(f, MonomialAlgebra::from_strs(&XYZ, &B, 6).unwrap())),
        ("A", GradedAlgebra::from_presentation(&pres(&XYZ, &A, 6))),
        ("hilbert", GradedAlgebra::from_presentation(&hs)),
        ("hilbert gr", gr_algebra(&hs)),
        ("skew", GradedAlgebra::from_presentation(&sk)),
        ("skew gr", gr_algebra(&sk)),
        ("augmented gr", gr_algebra(&pres(&XY, &["y*x - x*y", "x^3 - y^2"], 6))),
        ("face 3", face(3)),
        ("face 4", face(4)),
    ]
}

fn differential_squares_to_zero(alg: &GradedAlgebra<PrimeField>, nmax: usize, bound: usize) -> Result<usize, String> {
    let f = alg.field();
    let mut checked = 0;
    for j in 0..=bound {
        for n in 2..=nmax {
            let hi = chain_differential(alg, n, j).map_err(|e| e.to_string())?;
            let lo = chain_differential(alg, n - 1, j).map_err(|e| e.to_string())?;
            for row in &hi.rows {
                let mut acc = Vec::new();
                for (s, x) in row {
                    acc.extend(lo.rows[*s].iter().map(|(c, y)| (*c, f.mul(x, y))));
                }
                if !normalize(f, acc).is_empty() {
                    return Err(format!("d∘d ≠ 0 at ({n}, {j})"));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn random_poly(rng: &mut StdRng, f: &PrimeField, nvars: usize, maxdeg: usize) -> Polynomial<u32> {
    let mut p = Polynomial::zero();
    for d in 1..=maxdeg {
        if rng.gen_bool(0.6) {
            p = p.add(f, &random_homogeneous_poly(rng, f, nvars, d));
        }
    }
    p
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6b32);
    let mut notes = Vec::new();

    let mut bidegrees = 0;
    for (name, alg) in golden() {
        let d = alg.bound();
        bidegrees += differential_squares_to_zero(&alg, 5, d).map_err(|e| format!("{name}: {e}"))?;
    }
    notes.push(format!("d∘d = 0 on {bidegrees} blocks"));

    let mut inputs = 0;
    while inputs < 1000 {
        let p = random_presentation(&mut rng, 6);
        let g = complete(&p);
        let f = p.field();
        let n = p.vars().len();
        for _ in 0..20 {
            let a = random_poly(&mut rng, f, n, 5);
            let b = random_poly(&mut rng, f, n, 5);
            let na = g.normal_form(&a);
            ensure(g.normal_form(&na) == na, || format!("NF not idempotent on {a:?}"))?;
            ensure(na.words().all(|w| g.is_normal_word(w)), || format!("NF not normal on {a:?}"))?;
            let (s, t) = (f.from_i64(rng.gen_range(-50..50)), f.from_i64(rng.gen_range(-50..50)));
            let lhs = g.normal_form(&a.scale(f, &s).add(f, &b.scale(f, &t)));
            let rhs = na.scale(f, &s).add(f, &g.normal_form(&b).scale(f, &t));
            ensure(lhs == rhs, || format!("NF not linear on {a:?}, {b:?}"))?;
            inputs += 1;
        }
    }
    notes.push(format!("NF on {inputs} inputs"));

    let mut strict = 0;
    for i in 0..50 {
        let p = random_presentation(&mut rng, 6);
        let c = lambda_dim_check(&p, 4, 6).map_err(|e| e.to_string())?;
        ensure(c.holds, || format!("presentation {i}: violations {:?}", c.violations))?;
        strict += usize::from(!c.strict.is_empty());
    }
    notes.push(format!("Λ inequality on 50 presentations ({strict} strict)"));

    let f = PrimeField::default();
    let mut complexes = 0;
    for c in complexes_on(4) {
        let ord = VertexOrdering::identity(4);
        let (good, _) = betweenness_check(&c, &ord).map_err(|e| e.to_string())?;
        let p = face_algebra_presentation(f, &c, &ord, Some(6)).map_err(|e| e.to_string())?;
        let v = essential_groebner_test(&p).map_err(|e| e.to_string())?.verdict;
        let yes = match v {
            EssentialVerdict::Yes => true,
            EssentialVerdict::No { .. } => false,
            EssentialVerdict::InconclusiveAtBound { .. } => return Err(format!("inconclusive on {c:?}")),
        };
        ensure(yes == good, || format!("ordering property {good} but essential {yes} on {c:?}"))?;
        complexes += 1;
    }
    ensure(complexes == 114, || format!("{complexes} complexes on 4 vertices"))?;
    notes.push(format!("ordering equivalence on {complexes} complexes"));

    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let facets: Vec<Vec<String>> = (0..rng.gen_range(0..5))
            .map(|_| {
                let m: u32 = rng.gen_range(1..1 << n);
                (0..n).filter(|i| m >> i & 1 == 1).map(|i| vertices[i].clone()).collect()
            })
            .collect();
        let c = SimplicialComplex::from_facets(vertices, &facets).map_err(|e| e.to_string())?;
        let p = face_algebra_presentation(f, &c, &VertexOrdering::identity(n), Some(n + 2)).map_err(|e| e.to_string())?;
        let h = hilbert_coeffs(&associated_graded(&complete(&p)));
        let counts = c.face_counts();
        for (j, hj) in h.iter().enumerate() {
            let fj = counts.get(j).copied().unwrap_or(0);
            ensure(*hj == fj, || format!("degree {j}: hilbert {hj}, faces {fj} on {c:?}"))?;
        }
    }
    notes.push("f-vector identity on 40 complexes".into());

    for (name, alg) in golden() {
        let d = alg.bound();
        let t = ext_dims(&alg, d, d).map_err(|e| e.to_string())?;
        let prod = hilbert_euler_product(&hilbert_coeffs(alg.normal_algebra()), &t.euler_series());
        ensure(prod[0] == 1 && prod[1..=d].iter().all(|c| *c == 0), || format!("{name}: {prod:?}"))?;
    }
    notes.push("Hilbert-Euler product = 1 on golden examples".into());
    Ok(notes.join("; "))
}

fn complexes_on(n: usize) -> Vec<SimplicialComplex> {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let candidates: Vec<u64> = (1u64..1 << n).filter(|s| s.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for pick in 0u64..1 << candidates.len() {
        let chosen: Vec<u64> = (0..candidates.len()).filter(|i| pick >> i & 1 == 1).map(|i| candidates[i]).collect();
        if !chosen.iter().all(|a| chosen.iter().all(|b| a == b || a & b != *a)) {
            continue;
        }
        let missing: Vec<Vec<String>> = chosen
            .iter()
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| names[i].clone()).collect())
            .collect();
        out.push(SimplicialComplex::from_missing(names.clone(), &missing).unwrap());
    }
    out
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("leading monomial failure", leading_monomial_failure),
        ("hilbert series example", hilbert_series_example),
        ("resolution dimensions", resolution_dimensions),
        ("skew cubic basis", skew_cubic),
        ("augmented example", augmented_example),
        ("grassmann modulo top degree", grassmann_mod_top),
        ("six vertex counterexample", six_vertex_counterexample),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    let mut results = BTreeMap::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("PASS {}. {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name} ({secs:.1}s): {why}", i + 1);
            }
        }
        results.insert(i + 1, outcome.is_ok());
    }
    println!("{} of {} criteria passed", results.values().filter(|ok| **ok).count(), results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
