//! Shared helpers for the integration suites: a tiny seeded generator, an
//! independent acceptance oracle, and word enumeration.

#![allow(dead_code)]

use std::collections::HashSet;

use rwp_core::{Afsa, ShiftInjection, Transition, WordPair};

/// SplitMix64; fixed seeds keep every randomized suite reproducible.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// A random automaton over `alphabet` with at most `max_states` states.
/// Transitions may consume either tape, both, or neither.
pub fn random_afsa(rng: &mut SplitMix64, max_states: usize, alphabet: &[char]) -> Afsa {
    let n = 1 + rng.below(max_states);
    let states: Vec<String> = (0..n).map(|k| format!("q{k}")).collect();
    let finals: Vec<String> = states.iter().filter(|_| rng.coin()).cloned().collect();
    let label = |rng: &mut SplitMix64| -> Option<char> {
        let k = rng.below(alphabet.len() + 1);
        (k > 0).then(|| alphabet[k - 1])
    };
    let count = rng.below(3 * n + 1);
    let transitions: Vec<Transition> = (0..count)
        .map(|_| {
            Transition::new(
                states[rng.below(n)].clone(),
                label(rng),
                label(rng),
                states[rng.below(n)].clone(),
            )
        })
        .collect();
    Afsa::new(states, "q0", finals, alphabet.iter().copied(), transitions)
        .expect("generated automaton is well-formed")
}

/// Independent acceptance oracle: a backward fixpoint over the whole
/// configuration graph. Starts from the accepting halt configurations and
/// repeatedly marks configurations with a transition into a marked one;
/// the automaton accepts iff the initial configuration ends up marked.
pub fn fixpoint_accepts(afsa: &Afsa, pair: &WordPair) -> bool {
    let u: Vec<char> = pair.first.chars().collect();
    let v: Vec<char> = pair.second.chars().collect();
    let mut marked: HashSet<(String, usize, usize)> = afsa
        .finals()
        .iter()
        .map(|f| (f.clone(), u.len(), v.len()))
        .collect();
    loop {
        let mut changed = false;
        for t in afsa.transitions() {
            for i in 0..=u.len() {
                for j in 0..=v.len() {
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
                    if marked.contains(&(t.to.clone(), ni, nj))
                        && marked.insert((t.from.clone(), i, j))
                    {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return marked.contains(&(afsa.start().to_string(), 0, 0));
        }
    }
}

/// Literal run enumeration: depth-first over all transition sequences that
/// never revisit a configuration (any accepting run shortens to such a run).
/// Panics if the search expands more than `budget` nodes, so a blowup is
/// visible rather than silent.
pub fn enumerated_runs_accept(afsa: &Afsa, pair: &WordPair, budget: usize) -> bool {
    let u: Vec<char> = pair.first.chars().collect();
    let v: Vec<char> = pair.second.chars().collect();
    let mut path = vec![(afsa.start().to_string(), 0usize, 0usize)];
    let mut spent = 0usize;
    dfs(afsa, &u, &v, &mut path, &mut spent, budget)
}

fn dfs(
    afsa: &Afsa,
    u: &[char],
    v: &[char],
    path: &mut Vec<(String, usize, usize)>,
    spent: &mut usize,
    budget: usize,
) -> bool {
    *spent += 1;
    assert!(*spent <= budget, "run enumeration exceeded its budget");
    let (state, i, j) = path.last().cloned().expect("path nonempty");
    if i == u.len() && j == v.len() && afsa.finals().contains(&state) {
        return true;
    }
    for t in afsa.transitions() {
        if t.from != state {
            continue;
        }
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
        let cfg = (t.to.clone(), ni, nj);
        if path.contains(&cfg) {
            continue;
        }
        path.push(cfg);
        if dfs(afsa, u, v, path, spent, budget) {
            return true;
        }
        path.pop();
    }
    false
}

/// All words over `symbols` with length in `0..=max_len`, in
/// (length, lexicographic) order.
pub fn words_up_to(symbols: &[char], max_len: usize) -> Vec<String> {
    let mut by_len: Vec<Vec<String>> = vec![vec![String::new()]];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &by_len[len - 1] {
            for &s in symbols {
                let mut ext = w.clone();
                ext.push(s);
                next.push(ext);
            }
        }
        by_len.push(next);
    }
    by_len.into_iter().flatten().collect()
}

/// The image of a word over `{b, c}` under `b ↦` forward link,
/// `c ↦` backward link; `None` on foreign symbols.
pub fn shift_image(word: &str) -> Option<ShiftInjection> {
    let mut acc = ShiftInjection::new(1, 0).expect("identity shift");
    for ch in word.chars() {
        let step = match ch {
            'b' => ShiftInjection::forward_link(),
            'c' => ShiftInjection::backward_link(),
            _ => return None,
        };
        acc = acc.compose(step);
    }
    Some(acc)
}
