//! Acceptance and run extraction over the configuration graph.
//!
//! A configuration is (state, symbols consumed on tape 1, symbols consumed
//! on tape 2); there are at most `|Q| · (|u|+1) · (|v|+1)` of them, which
//! bounds every search here and makes ε/ε cycles harmless.
//!
//! [`Afsa::accepts`] sweeps the consumption grid row by row, keeping only
//! the set of states reachable at each cell, so memory stays proportional
//! to `|u|`. [`Afsa::find_accepting_run`] needs the actual path, so it runs
//! a breadth-first search ordered by total consumption (then discovery
//! order) over sorted transitions and keeps one parent entry per visited
//! configuration; the returned run is therefore deterministic for a given
//! automaton and input.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use super::{Afsa, Run, Transition, WordPair};
use crate::error::{Error, Result};

const MAX_POS: usize = 1 << 24;

#[derive(Debug, Clone, Copy)]
struct IdxTransition {
    from: u16,
    first: Option<char>,
    second: Option<char>,
    to: u16,
}

struct Indexed<'a> {
    start: u16,
    finals: Vec<bool>,
    trans: Vec<IdxTransition>,
    originals: Vec<&'a Transition>,
    by_state: Vec<Vec<u32>>,
    /// ε/ε-reachability per state (including the state itself), present only
    /// when the automaton has transitions consuming nothing at all.
    eps_closure: Option<Vec<Vec<u16>>>,
}

impl<'a> Indexed<'a> {
    fn build(afsa: &'a Afsa) -> Result<Self> {
        if afsa.states.len() > u16::MAX as usize {
            return Err(Error::InvalidArgument(format!(
                "automaton has too many states ({})",
                afsa.states.len()
            )));
        }
        let names: Vec<&str> = afsa.states.iter().map(String::as_str).collect();
        let index: HashMap<&str, u16> = names
            .iter()
            .enumerate()
            .map(|(k, &n)| (n, k as u16))
            .collect();
        let start = index[afsa.start.as_str()];
        let mut finals = vec![false; names.len()];
        for f in &afsa.finals {
            finals[index[f.as_str()] as usize] = true;
        }
        let mut trans = Vec::with_capacity(afsa.transitions.len());
        let mut originals = Vec::with_capacity(afsa.transitions.len());
        let mut by_state = vec![Vec::new(); names.len()];
        let mut has_eps_eps = false;
        for t in &afsa.transitions {
            let it = IdxTransition {
                from: index[t.from.as_str()],
                first: t.first,
                second: t.second,
                to: index[t.to.as_str()],
            };
            has_eps_eps |= it.first.is_none() && it.second.is_none();
            by_state[it.from as usize].push(trans.len() as u32);
            trans.push(it);
            originals.push(t);
        }
        let eps_closure = has_eps_eps.then(|| {
            (0..names.len() as u16)
                .map(|q| {
                    let mut seen = vec![q];
                    let mut queue = VecDeque::from([q]);
                    while let Some(p) = queue.pop_front() {
                        for &ti in &by_state[p as usize] {
                            let t = trans[ti as usize];
                            if t.first.is_none() && t.second.is_none() && !seen.contains(&t.to) {
                                seen.push(t.to);
                                queue.push_back(t.to);
                            }
                        }
                    }
                    seen.sort_unstable();
                    seen
                })
                .collect()
        });
        Ok(Self {
            start,
            finals,
            trans,
            originals,
            by_state,
            eps_closure,
        })
    }

    fn close(&self, cell: &mut Vec<u16>) {
        if let Some(closures) = &self.eps_closure {
            let base = std::mem::take(cell);
            for q in base {
                for &r in &closures[q as usize] {
                    insert_sorted(cell, r);
                }
            }
        }
    }

    fn step_into(&self, out: &mut Vec<u16>, src: &[u16], first: Option<char>, second: Option<char>) {
        for &q in src {
            for &ti in &self.by_state[q as usize] {
                let t = self.trans[ti as usize];
                if t.first == first && t.second == second {
                    insert_sorted(out, t.to);
                }
            }
        }
    }

    /// Row-by-row reachability sweep over the consumption grid.
    fn accepts(&self, u: &[char], v: &[char]) -> bool {
        let width = u.len() + 1;
        let mut prev: Vec<Vec<u16>> = vec![Vec::new(); width];
        let mut cur: Vec<Vec<u16>> = vec![Vec::new(); width];

        cur[0].push(self.start);
        self.close(&mut cur[0]);
        for i in 1..width {
            let (done, rest) = cur.split_at_mut(i);
            let cell = &mut rest[0];
            self.step_into(cell, &done[i - 1], Some(u[i - 1]), None);
            self.close(cell);
        }
        for j in 1..=v.len() {
            std::mem::swap(&mut prev, &mut cur);
            let b = v[j - 1];
            cur[0].clear();
            self.step_into(&mut cur[0], &prev[0], None, Some(b));
            self.close(&mut cur[0]);
            for i in 1..width {
                let (done, rest) = cur.split_at_mut(i);
                let cell = &mut rest[0];
                cell.clear();
                self.step_into(cell, &prev[i], None, Some(b));
                self.step_into(cell, &prev[i - 1], Some(u[i - 1]), Some(b));
                self.step_into(cell, &done[i - 1], Some(u[i - 1]), None);
                self.close(cell);
            }
        }
        cur[u.len()].iter().any(|&q| self.finals[q as usize])
    }

    /// Breadth-first search layered by total consumption; within a layer,
    /// configurations are expanded in discovery order and the sorted
    /// transitions of a state are tried in order. Returns the transition
    /// indices of the first accepting path discovered.
    fn bfs_run(&self, u: &[char], v: &[char]) -> Option<Vec<u32>> {
        let pack = |q: u16, i: usize, j: usize| ((q as u64) << 48) | ((i as u64) << 24) | j as u64;
        let goal = |q: u16, i: usize, j: usize| {
            i == u.len() && j == v.len() && self.finals[q as usize]
        };

        let total = u.len() + v.len();
        let mut levels: Vec<VecDeque<u64>> = vec![VecDeque::new(); total + 1];
        // Maps each discovered configuration to the transition that first
        // reached it; the predecessor configuration is recomputable from the
        // transition's source state and consumption.
        let mut parent: HashMap<u64, u32> = HashMap::new();
        let start_cfg = pack(self.start, 0, 0);
        parent.insert(start_cfg, u32::MAX);
        if goal(self.start, 0, 0) {
            return Some(Vec::new());
        }
        levels[0].push_back(start_cfg);

        let mut accepted: Option<u64> = None;
        'search: for level in 0..=total {
            while let Some(cfg) = levels[level].pop_front() {
                let q = (cfg >> 48) as u16;
                let i = ((cfg >> 24) & 0xFF_FFFF) as usize;
                let j = (cfg & 0xFF_FFFF) as usize;
                for &ti in &self.by_state[q as usize] {
                    let t = self.trans[ti as usize];
                    let ni = match t.first {
                        None => i,
                        Some(a) if u.get(i) == Some(&a) => i + 1,
                        Some(_) => continue,
                    };
                    let nj = match t.second {
                        None => j,
                        Some(b) if v.get(j) == Some(&b) => j + 1,
                        Some(_) => continue,
                    };
                    let ncfg = pack(t.to, ni, nj);
                    if let Entry::Vacant(slot) = parent.entry(ncfg) {
                        slot.insert(ti);
                        if goal(t.to, ni, nj) {
                            accepted = Some(ncfg);
                            break 'search;
                        }
                        levels[ni + nj].push_back(ncfg);
                    }
                }
            }
        }

        let mut cfg = accepted?;
        let mut steps = Vec::new();
        while cfg != start_cfg {
            let ti = parent[&cfg];
            let t = self.trans[ti as usize];
            steps.push(ti);
            let i = ((cfg >> 24) & 0xFF_FFFF) as usize - t.first.is_some() as usize;
            let j = (cfg & 0xFF_FFFF) as usize - t.second.is_some() as usize;
            cfg = pack(t.from, i, j);
        }
        steps.reverse();
        Some(steps)
    }
}

fn insert_sorted(set: &mut Vec<u16>, x: u16) {
    if let Err(pos) = set.binary_search(&x) {
        set.insert(pos, x);
    }
}

impl Afsa {
    /// Whether some computation consumes both words completely and ends in
    /// a final state. Symbols outside the alphabet are an input error.
    pub fn accepts(&self, pair: &WordPair) -> Result<bool> {
        let u = self.word_chars(&pair.first)?;
        let v = self.word_chars(&pair.second)?;
        let idx = Indexed::build(self)?;
        Ok(idx.accepts(&u, &v))
    }

    /// An accepting run, if one exists. The result is deterministic: the
    /// search explores configurations breadth-first by total consumption,
    /// trying the transitions of each state in sorted order.
    pub fn find_accepting_run(&self, pair: &WordPair) -> Result<Option<Run>> {
        let u = self.word_chars(&pair.first)?;
        let v = self.word_chars(&pair.second)?;
        if u.len() >= MAX_POS || v.len() >= MAX_POS {
            return Err(Error::InvalidArgument("input words are too long".into()));
        }
        let idx = Indexed::build(self)?;
        match idx.bfs_run(&u, &v) {
            None => Ok(None),
            Some(step_indices) => {
                let steps = step_indices
                    .iter()
                    .map(|&ti| idx.originals[ti as usize].clone())
                    .collect();
                let run = Run::from_steps(self, pair.clone(), steps)?;
                debug_assert!(run.is_accepting(self));
                Ok(Some(run))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afsa::Transition;
    use crate::wordproblem::free_monoid_afsa;

    fn pair(a: &str, b: &str) -> WordPair {
        WordPair::new(a, b)
    }

    #[test]
    fn free_monoid_accepts_only_the_diagonal() {
        let afsa = free_monoid_afsa(&['a', 'b']).unwrap();
        assert!(afsa.accepts(&pair("ab", "ab")).unwrap());
        assert!(!afsa.accepts(&pair("ab", "ba")).unwrap());
    }

    #[test]
    fn independent_tapes() {
        let afsa = Afsa::new(
            ["q0"],
            "q0",
            ["q0"],
            ['a', 'b'],
            [
                Transition::new("q0", Some('a'), None, "q0"),
                Transition::new("q0", None, Some('b'), "q0"),
            ],
        )
        .unwrap();
        assert!(afsa.accepts(&pair("aa", "b")).unwrap());
        assert!(!afsa.accepts(&pair("ab", "b")).unwrap());
    }

    #[test]
    fn symbols_outside_alphabet_are_input_errors() {
        let afsa = free_monoid_afsa(&['a']).unwrap();
        assert_eq!(
            afsa.accepts(&pair("ac", "a")),
            Err(Error::SymbolOutsideAlphabet('c'))
        );
    }

    #[test]
    fn run_for_single_step() {
        let afsa = free_monoid_afsa(&['a', 'b']).unwrap();
        let run = afsa.find_accepting_run(&pair("a", "a")).unwrap().unwrap();
        assert_eq!(run.steps(), &[Transition::new("q0", Some('a'), Some('a'), "q0")]);
        assert!(run.is_accepting(&afsa));
        assert!(afsa.find_accepting_run(&pair("a", "b")).unwrap().is_none());
    }

    #[test]
    fn epsilon_epsilon_cycles_terminate() {
        let afsa = Afsa::new(
            ["p", "q"],
            "p",
            ["q"],
            ['a'],
            [
                Transition::new("p", None, None, "p"),
                Transition::new("p", Some('a'), Some('a'), "q"),
                Transition::new("q", None, None, "p"),
            ],
        )
        .unwrap();
        assert!(afsa.accepts(&pair("a", "a")).unwrap());
        assert!(!afsa.accepts(&pair("a", "")).unwrap());
        let run = afsa.find_accepting_run(&pair("a", "a")).unwrap().unwrap();
        assert!(run.is_accepting(&afsa));
    }

    #[test]
    fn epsilon_reachable_final_accepts_empty_pair() {
        let afsa = Afsa::new(
            ["p", "q"],
            "p",
            ["q"],
            ['a'],
            [Transition::new("p", None, None, "q")],
        )
        .unwrap();
        assert!(afsa.accepts(&pair("", "")).unwrap());
        let run = afsa.find_accepting_run(&pair("", "")).unwrap().unwrap();
        assert_eq!(run.steps().len(), 1);
    }

    #[test]
    fn empty_pair_accepted_exactly_when_start_is_final() {
        let accepting = free_monoid_afsa(&['a']).unwrap();
        assert!(accepting.accepts(&pair("", "")).unwrap());
        let rejecting = Afsa::new(["q0"], "q0", Vec::<String>::new(), ['a'], []).unwrap();
        assert!(!rejecting.accepts(&pair("", "")).unwrap());
    }
}
