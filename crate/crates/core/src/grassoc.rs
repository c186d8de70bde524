//! Monomial algebras `K<vars> / (words)`: the associated graded algebra of a
//! presentation, its normal words and Hilbert coefficients.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::freealg::{VariableSet, Word};
use crate::groebner::GroebnerBasis;

/// Multi-pattern automaton over the minimal generators. A state is
/// `forbidden` once some generator ends at the current position, so a DFS
/// that never enters a forbidden state only produces normal words.
#[derive(Clone, Debug)]
pub struct FactorAutomaton {
    alphabet: usize,
    next: Vec<Vec<usize>>,
    forbidden: Vec<bool>,
}

impl FactorAutomaton {
    pub fn new(alphabet: usize, patterns: &[Word]) -> Self {
        let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; alphabet]];
        let mut terminal = vec![false];
        for p in patterns {
            let mut s = 0;
            for &c in p.letters() {
                s = match goto[s][c as usize] {
                    Some(t) => t,
                    None => {
                        goto.push(vec![None; alphabet]);
                        terminal.push(false);
                        let t = goto.len() - 1;
                        goto[s][c as usize] = Some(t);
                        t
                    }
                };
            }
            terminal[s] = true;
        }
        let n = goto.len();
        let mut next = vec![vec![0usize; alphabet]; n];
        let mut fail = vec![0usize; n];
        let mut forbidden = terminal;
        let mut queue = VecDeque::new();
        for c in 0..alphabet {
            if let Some(t) = goto[0][c] {
                next[0][c] = t;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            forbidden[s] = forbidden[s] || forbidden[fail[s]];
            for c in 0..alphabet {
                match goto[s][c] {
                    Some(t) => {
                        fail[t] = next[fail[s]][c];
                        next[s][c] = t;
                        queue.push_back(t);
                    }
                    None => next[s][c] = next[fail[s]][c],
                }
            }
        }
        Self {
            alphabet,
            next,
            forbidden,
        }
    }

    pub fn start(&self) -> usize {
        0
    }

    pub fn step(&self, state: usize, letter: u8) -> usize {
        self.next[state][letter as usize]
    }

    pub fn is_forbidden(&self, state: usize) -> bool {
        self.forbidden[state]
    }

    /// Runs the automaton over `letters`; `None` as soon as a pattern occurs.
    pub fn run(&self, state: usize, letters: &[u8]) -> Option<usize> {
        let mut s = state;
        for &c in letters {
            s = self.step(s, c);
            if self.forbidden[s] {
                return None;
            }
        }
        Some(s)
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(self.start(), w.letters()).is_some()
    }

    /// Number of words of each length `0..=max` avoiding every pattern.
    pub fn count_by_length(&self, max: usize) -> Vec<usize> {
        let n = self.next.len();
        let mut cur = vec![0usize; n];
        cur[0] = 1;
        let mut out = vec![1usize];
        for _ in 0..max {
            let mut nxt = vec![0usize; n];
            for (s, &k) in cur.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                for c in 0..self.alphabet {
                    let t = self.next[s][c];
                    if !self.forbidden[t] {
                        nxt[t] += k;
                    }
                }
            }
            out.push(nxt.iter().sum());
            cur = nxt;
        }
        out
    }
}

/// `K<vars> / (mingens)` truncated at `bound`.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialAlgebra {
    vars: VariableSet,
    mingens: Vec<Word>,
    bound: usize,
    #[serde(skip)]
    automaton: FactorAutomaton,
}

impl PartialEq for MonomialAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.mingens == other.mingens && self.bound == other.bound
    }
}

impl MonomialAlgebra {
    /// Keeps only minimal generators (drops duplicates and words containing
    /// another generator), sorted in deglex order.
    pub fn new(vars: VariableSet, gens: Vec<Word>, bound: usize) -> Result<Self> {
        for g in &gens {
            g.check_alphabet(&vars)?;
            if g.is_empty() {
                return Err(Error::Presentation("empty monomial generator".into()));
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let mingens: Vec<Word> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && g.contains(h)))
            .cloned()
            .collect();
        let automaton = FactorAutomaton::new(vars.len(), &mingens);
        Ok(Self {
            vars,
            mingens,
            bound,
            automaton,
        })
    }

    /// The free algebra, as a monomial algebra with no generators.
    pub fn free(vars: VariableSet, bound: usize) -> Self {
        Self::new(vars, Vec::new(), bound).expect("no generators to validate")
    }

    pub fn from_strs(vars: &[&str], gens: &[&str], bound: usize) -> Result<Self> {
        let vars = VariableSet::new(vars.iter().copied())?;
        let gens = gens.iter().map(|g| vars.word(g)).collect::<Result<Vec<_>>>()?;
        Self::new(vars, gens, bound)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }
    pub fn mingens(&self) -> &[Word] {
        &self.mingens
    }
    pub fn bound(&self) -> usize {
        self.bound
    }
    pub fn automaton(&self) -> &FactorAutomaton {
        &self.automaton
    }

    pub fn with_bound(&self, bound: usize) -> Self {
        Self {
            bound,
            ..self.clone()
        }
    }

    pub fn max_generator_degree(&self) -> usize {
        self.mingens.iter().map(Word::degree).max().unwrap_or(0)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.automaton.accepts(w)
    }

    /// Concatenation if it is normal, `None` if it vanishes in the algebra.
    pub fn product(&self, a: &Word, b: &Word) -> Option<Word> {
        let w = a.concat(b);
        self.is_normal(&w).then_some(w)
    }

    /// Normal words of degree `j` in ascending order, for `j` up to any
    /// length (no truncation check).
    pub fn normal_words_unchecked(&self, j: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(j);
        self.dfs(self.automaton.start(), j, &mut buf, &mut out);
        out
    }

    fn dfs(&self, state: usize, left: usize, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word::new(buf.clone()));
            return;
        }
        for c in 0..self.vars.len() as u8 {
            let t = self.automaton.step(state, c);
            if self.automaton.is_forbidden(t) {
                continue;
            }
            buf.push(c);
            self.dfs(t, left - 1, buf, out);
            buf.pop();
        }
    }
}

/// `gr A` from a completed basis: the leading words as monomial generators.
pub fn associated_graded<F: Field>(g: &GroebnerBasis<F>) -> MonomialAlgebra {
    MonomialAlgebra::new(g.vars().clone(), g.leading_words(), g.complete_below())
        .expect("leading words are valid words over the alphabet")
}

/// Degree-`j` words avoiding every generator, ascending; refused beyond the
/// certified bound.
pub fn normal_words(m: &MonomialAlgebra, j: usize) -> Result<Vec<Word>> {
    if j > m.bound() {
        return Err(Error::Truncation(format!(
            "degree {j} exceeds the certified bound {}",
            m.bound()
        )));
    }
    Ok(m.normal_words_unchecked(j))
}

/// Hilbert coefficients for degrees `0..=bound`.
pub fn hilbert_coeffs(m: &MonomialAlgebra) -> Vec<usize> {
    m.automaton.count_by_length(m.bound())
}
