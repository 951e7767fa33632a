//! Two-tape asynchronous finite state automata.
//!
//! An automaton reads a pair of words, consuming the next symbol from either
//! tape (or neither) on each transition; `None` labels mean nothing is
//! consumed from that tape. A pair is accepted when some transition sequence
//! consumes both words completely and ends in a final state.
//!
//! Everything here is immutable after construction and all operations are
//! pure functions, so values can be shared freely across threads.

mod dot;
mod parse;
mod search;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single transition: in state `from`, optionally consume `first` from
/// tape 1 and `second` from tape 2, then move to state `to`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub from: String,
    pub first: Option<char>,
    pub second: Option<char>,
    pub to: String,
}

impl Transition {
    pub fn new(
        from: impl Into<String>,
        first: Option<char>,
        second: Option<char>,
        to: impl Into<String>,
    ) -> Self {
        Self {
            from: from.into(),
            first,
            second,
            to: to.into(),
        }
    }
}

/// A two-tape asynchronous finite state automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Afsa {
    states: BTreeSet<String>,
    start: String,
    finals: BTreeSet<String>,
    alphabet: BTreeSet<char>,
    transitions: BTreeSet<Transition>,
}

fn check_state_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains(char::is_whitespace) || name.contains('#') {
        return Err(Error::InvalidArgument(format!(
            "state name '{name}' must be a non-empty token without whitespace or '#'"
        )));
    }
    Ok(())
}

fn check_symbol(sym: char) -> Result<()> {
    if sym.is_whitespace() || sym == '-' || sym == '#' {
        return Err(Error::InvalidArgument(format!(
            "'{sym}' cannot be an alphabet symbol ('-' is reserved for the empty label)"
        )));
    }
    Ok(())
}

impl Afsa {
    pub fn new(
        states: impl IntoIterator<Item = impl Into<String>>,
        start: impl Into<String>,
        finals: impl IntoIterator<Item = impl Into<String>>,
        alphabet: impl IntoIterator<Item = char>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self> {
        let states: BTreeSet<String> = states.into_iter().map(Into::into).collect();
        let start = start.into();
        let finals: BTreeSet<String> = finals.into_iter().map(Into::into).collect();
        let alphabet: BTreeSet<char> = alphabet.into_iter().collect();
        let transitions: BTreeSet<Transition> = transitions.into_iter().collect();

        for state in &states {
            check_state_name(state)?;
        }
        for &sym in &alphabet {
            check_symbol(sym)?;
        }
        if !states.contains(&start) {
            return Err(Error::InvalidArgument(format!("start state '{start}' is not a state")));
        }
        if let Some(f) = finals.iter().find(|f| !states.contains(*f)) {
            return Err(Error::InvalidArgument(format!("final state '{f}' is not a state")));
        }
        for t in &transitions {
            if !states.contains(&t.from) || !states.contains(&t.to) {
                return Err(Error::InvalidArgument(format!(
                    "transition {} .. {} mentions an unknown state",
                    t.from, t.to
                )));
            }
            for label in [t.first, t.second].into_iter().flatten() {
                if !alphabet.contains(&label) {
                    return Err(Error::InvalidArgument(format!(
                        "transition label '{label}' is not in the alphabet"
                    )));
                }
            }
        }
        Ok(Self {
            states,
            start,
            finals,
            alphabet,
            transitions,
        })
    }

    pub fn states(&self) -> &BTreeSet<String> {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn finals(&self) -> &BTreeSet<String> {
        &self.finals
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    pub(crate) fn word_chars(&self, word: &str) -> Result<Vec<char>> {
        word.chars()
            .map(|c| {
                if self.alphabet.contains(&c) {
                    Ok(c)
                } else {
                    Err(Error::SymbolOutsideAlphabet(c))
                }
            })
            .collect()
    }

    /// All accepted pairs with both words of length at most `max_len`,
    /// sorted by (|first|, |second|, first, second).
    pub fn enumerate_accepted(&self, max_len: usize) -> Vec<WordPair> {
        let symbols: Vec<char> = self.alphabet.iter().copied().collect();
        let mut words: Vec<Vec<String>> = vec![vec![String::new()]];
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &words[len - 1] {
                for &s in &symbols {
                    let mut ext = w.clone();
                    ext.push(s);
                    next.push(ext);
                }
            }
            words.push(next);
        }
        let mut out = Vec::new();
        for len_u in 0..=max_len {
            for len_v in 0..=max_len {
                for u in &words[len_u] {
                    for v in &words[len_v] {
                        let pair = WordPair::new(u.clone(), v.clone());
                        if self.accepts(&pair).expect("words drawn from the alphabet") {
                            out.push(pair);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Afsa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Afsa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Afsa::parse(s)
    }
}

/// A pair of input words, one per tape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordPair {
    pub first: String,
    pub second: String,
}

impl WordPair {
    pub fn new(first: impl Into<String>, second: impl Into<String>) -> Self {
        Self {
            first: first.into(),
            second: second.into(),
        }
    }
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// A point in a computation: current state plus how many symbols of each
/// tape have been consumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub state: String,
    pub pos_first: usize,
    pub pos_second: usize,
}

/// A transition sequence of an automaton on a particular input pair,
/// together with the configurations it passes through
/// (`configs.len() == steps.len() + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    input: WordPair,
    steps: Vec<Transition>,
    configs: Vec<Configuration>,
}

impl Run {
    /// Replays `steps` from the start state, validating every move against
    /// the automaton and the input pair.
    pub fn from_steps(afsa: &Afsa, input: WordPair, steps: Vec<Transition>) -> Result<Run> {
        let u = afsa.word_chars(&input.first)?;
        let v = afsa.word_chars(&input.second)?;
        let mut configs = vec![Configuration {
            state: afsa.start().to_string(),
            pos_first: 0,
            pos_second: 0,
        }];
        for step in &steps {
            if !afsa.transitions().contains(step) {
                return Err(Error::InvalidArgument(format!(
                    "step {step:?} is not a transition of the automaton"
                )));
            }
            let cur = configs.last().expect("nonempty");
            if step.from != cur.state {
                return Err(Error::InvalidArgument(format!(
                    "step from '{}' taken in state '{}'",
                    step.from, cur.state
                )));
            }
            let pos_first = match step.first {
                None => cur.pos_first,
                Some(a) if u.get(cur.pos_first) == Some(&a) => cur.pos_first + 1,
                Some(a) => {
                    return Err(Error::InvalidArgument(format!(
                        "step consumes '{a}' but tape 1 at position {} does not match",
                        cur.pos_first
                    )))
                }
            };
            let pos_second = match step.second {
                None => cur.pos_second,
                Some(b) if v.get(cur.pos_second) == Some(&b) => cur.pos_second + 1,
                Some(b) => {
                    return Err(Error::InvalidArgument(format!(
                        "step consumes '{b}' but tape 2 at position {} does not match",
                        cur.pos_second
                    )))
                }
            };
            configs.push(Configuration {
                state: step.to.clone(),
                pos_first,
                pos_second,
            });
        }
        Ok(Run {
            input,
            steps,
            configs,
        })
    }

    pub fn input(&self) -> &WordPair {
        &self.input
    }

    pub fn steps(&self) -> &[Transition] {
        &self.steps
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    /// Accepting means: both tapes fully consumed and the last state final.
    pub fn is_accepting(&self, afsa: &Afsa) -> bool {
        let last = self.configs.last().expect("nonempty");
        last.pos_first == self.input.first.chars().count()
            && last.pos_second == self.input.second.chars().count()
            && afsa.finals().contains(&last.state)
    }

    /// Looks for a state repeat among the *first* configurations reaching
    /// each tape-1 position inside `window` (inclusive). Restricting to
    /// first occurrences guarantees the repeat consumes at least one tape-1
    /// symbol. Returns the earliest repeat, or `None`.
    ///
    /// By pigeonhole this always succeeds when the window spans more than
    /// `state_count` positions all reached by the run.
    pub fn find_loop(&self, window: RangeInclusive<usize>) -> Result<Option<LoopDecomposition<'_>>> {
        let (lo, hi) = (*window.start(), *window.end());
        let len = self.input.first.chars().count();
        if lo > hi || hi > len {
            return Err(Error::InvalidWindow {
                start: lo,
                end: hi,
                len,
            });
        }
        let mut first_at: Vec<Option<usize>> = vec![None; hi - lo + 1];
        for (idx, cfg) in self.configs.iter().enumerate() {
            if (lo..=hi).contains(&cfg.pos_first) {
                let slot = &mut first_at[cfg.pos_first - lo];
                if slot.is_none() {
                    *slot = Some(idx);
                }
            }
        }
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for slot in &first_at {
            let Some(idx) = *slot else { continue };
            let state = self.configs[idx].state.as_str();
            if let Some(&earlier) = seen.get(state) {
                return Ok(Some(LoopDecomposition::new(self, earlier, idx)?));
            }
            seen.insert(state, idx);
        }
        Ok(None)
    }
}

/// A segment of a run that starts and ends in the same state, plus what it
/// consumed from each tape. Repeating the segment's input yields further
/// accepted pairs.
#[derive(Debug, Clone)]
pub struct LoopDecomposition<'a> {
    run: &'a Run,
    loop_start: usize,
    loop_end: usize,
    consumed_first: usize,
    consumed_second: usize,
}

impl<'a> LoopDecomposition<'a> {
    /// `loop_start` and `loop_end` index into `run.configs()` and must carry
    /// equal states.
    pub fn new(run: &'a Run, loop_start: usize, loop_end: usize) -> Result<Self> {
        if loop_start >= loop_end || loop_end >= run.configs.len() {
            return Err(Error::InvalidArgument(format!(
                "loop indices {loop_start}..{loop_end} out of order or out of range"
            )));
        }
        let a = &run.configs[loop_start];
        let b = &run.configs[loop_end];
        if a.state != b.state {
            return Err(Error::InvalidArgument(format!(
                "loop endpoints have different states '{}' and '{}'",
                a.state, b.state
            )));
        }
        Ok(Self {
            run,
            loop_start,
            loop_end,
            consumed_first: b.pos_first - a.pos_first,
            consumed_second: b.pos_second - a.pos_second,
        })
    }

    pub fn run(&self) -> &Run {
        self.run
    }

    pub fn loop_start(&self) -> usize {
        self.loop_start
    }

    pub fn loop_end(&self) -> usize {
        self.loop_end
    }

    pub fn consumed_first(&self) -> usize {
        self.consumed_first
    }

    pub fn consumed_second(&self) -> usize {
        self.consumed_second
    }

    /// The input pair with the loop's consumed segments repeated `k` times;
    /// `k = 1` reproduces the original pair. Every `k ≥ 0` is accepted by
    /// the automaton the run belongs to.
    pub fn pump(&self, k: usize) -> WordPair {
        let splice = |word: &str, from: usize, to: usize| {
            let chars: Vec<char> = word.chars().collect();
            let mut out: String = chars[..from].iter().collect();
            for _ in 0..k {
                out.extend(&chars[from..to]);
            }
            out.extend(&chars[to..]);
            out
        };
        let a = &self.run.configs[self.loop_start];
        let b = &self.run.configs[self.loop_end];
        WordPair::new(
            splice(&self.run.input.first, a.pos_first, b.pos_first),
            splice(&self.run.input.second, a.pos_second, b.pos_second),
        )
    }
}
