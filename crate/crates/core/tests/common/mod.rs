#![allow(dead_code)]

use k2ws::freealg::all_words;
use k2ws::linalg::{self, SparseVec};
use k2ws::{Field, Polynomial, Presentation, PrimeField, VariableSet, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

pub fn field() -> PrimeField {
    PrimeField::default()
}

pub fn random_word(rng: &mut StdRng, nvars: usize, degree: usize) -> Word {
    Word::new((0..degree).map(|_| rng.gen_range(0..nvars) as u8).collect())
}

pub fn random_coeff(rng: &mut StdRng, f: &PrimeField) -> u32 {
    f.from_i64(*[1i64, -1, 2, -3, 5].get(rng.gen_range(0..5)).unwrap())
}

/// A nonzero homogeneous polynomial with up to three terms.
pub fn random_homogeneous_poly(rng: &mut StdRng, f: &PrimeField, nvars: usize, degree: usize) -> Polynomial<u32> {
    loop {
        let terms = (0..rng.gen_range(1..=3))
            .map(|_| (random_word(rng, nvars, degree), random_coeff(rng, f)))
            .collect();
        let p = Polynomial::from_terms(f, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Up to three variables, up to three relations of degree 2 or 3.
pub fn random_presentation(rng: &mut StdRng, bound: usize) -> Presentation<PrimeField> {
    let f = field();
    let nvars = rng.gen_range(1..=3);
    let nrels = rng.gen_range(1..=3);
    let rels = (0..nrels)
        .map(|_| {
            let d = rng.gen_range(2..=3);
            random_homogeneous_poly(rng, &f, nvars, d)
        })
        .collect();
    let vars = VariableSet::new(NAMES[..nvars].iter().copied()).unwrap();
    Presentation::new(f, vars, rels, Some(bound)).unwrap()
}

fn columns(nvars: usize, degree: usize) -> Vec<Word> {
    all_words(nvars, degree)
}

fn row_of(p: &Polynomial<u32>, cols: &[Word]) -> SparseVec<u32> {
    let f = field();
    let v = p
        .terms()
        .iter()
        .map(|(w, c)| (cols.iter().position(|x| x == w).unwrap(), *c))
        .collect();
    linalg::normalize(&f, v)
}

/// `dim I_m` by ranking every `u · r · w` of degree `m`.
pub fn brute_ideal_dim(p: &Presentation<PrimeField>, m: usize) -> usize {
    let f = p.field();
    let n = p.vars().len();
    let cols = columns(n, m);
    let mut rows = Vec::new();
    for r in p.relations() {
        let d = r.degree().unwrap();
        if d > m {
            continue;
        }
        for left in 0..=m - d {
            for u in all_words(n, left) {
                for w in all_words(n, m - d - left) {
                    rows.push(row_of(&r.sandwich(&u, &w), &cols));
                }
            }
        }
    }
    linalg::rank(f, cols.len(), &rows)
}

/// `dim (V·I + I·V)_m`, again by exhaustive sandwiches of lower degree.
pub fn brute_ideal_prime_dim(p: &Presentation<PrimeField>, m: usize) -> usize {
    let f = p.field();
    let n = p.vars().len();
    let cols = columns(n, m);
    let mut rows = Vec::new();
    for r in p.relations() {
        let d = r.degree().unwrap();
        if d >= m {
            continue;
        }
        for left in 0..=m - d {
            for u in all_words(n, left) {
                for w in all_words(n, m - d - left) {
                    rows.push(row_of(&r.sandwich(&u, &w), &cols));
                }
            }
        }
    }
    linalg::rank(f, cols.len(), &rows)
}

pub fn path(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(rel)
}
