//! Line-oriented text format for automata.
//!
//! ```text
//! # comments run to end of line
//! alphabet: a b
//! states: q0 q1
//! start: q0
//! final: q0
//! trans: q0 a a q0    # labels are symbols or `-` for the empty label
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Afsa, Transition};
use crate::error::{Error, Result};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

type RawTransition = (usize, String, Option<char>, Option<char>, String);

fn parse_symbol(token: &str, line: usize) -> Result<char> {
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c != '-' => Ok(c),
        (Some('-'), None) => Err(err(line, "'-' is reserved for the empty label")),
        _ => Err(err(line, format!("alphabet symbols are single characters, got '{token}'"))),
    }
}

fn parse_label(token: &str, line: usize) -> Result<Option<char>> {
    if token == "-" {
        return Ok(None);
    }
    let mut chars = token.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(Some(c)),
        _ => Err(err(line, format!("labels are single symbols or '-', got '{token}'"))),
    }
}

impl Afsa {
    pub fn parse(text: &str) -> Result<Afsa> {
        let mut alphabet: Option<(usize, Vec<char>)> = None;
        let mut states: Option<(usize, Vec<String>)> = None;
        let mut start: Option<(usize, String)> = None;
        let mut finals: Vec<(usize, String)> = Vec::new();
        let mut raw_trans: Vec<RawTransition> = Vec::new();

        for (n, raw_line) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw_line.split('#').next().unwrap_or("");
            let mut tokens = content.split_whitespace();
            let Some(head) = tokens.next() else { continue };
            let rest: Vec<&str> = tokens.collect();
            match head {
                "alphabet:" => {
                    if alphabet.is_some() {
                        return Err(err(line, "duplicate 'alphabet:' line"));
                    }
                    let syms = rest
                        .iter()
                        .map(|t| parse_symbol(t, line))
                        .collect::<Result<Vec<char>>>()?;
                    alphabet = Some((line, syms));
                }
                "states:" => {
                    if states.is_some() {
                        return Err(err(line, "duplicate 'states:' line"));
                    }
                    states = Some((line, rest.iter().map(|t| t.to_string()).collect()));
                }
                "start:" => {
                    if start.is_some() {
                        return Err(err(line, "duplicate 'start:' line"));
                    }
                    match rest.as_slice() {
                        [s] => start = Some((line, s.to_string())),
                        _ => return Err(err(line, "'start:' takes exactly one state")),
                    }
                }
                "final:" => {
                    finals.extend(rest.iter().map(|t| (line, t.to_string())));
                }
                "trans:" => match rest.as_slice() {
                    [from, l1, l2, to] => raw_trans.push((
                        line,
                        from.to_string(),
                        parse_label(l1, line)?,
                        parse_label(l2, line)?,
                        to.to_string(),
                    )),
                    _ => {
                        return Err(err(
                            line,
                            "'trans:' takes source, two labels and target",
                        ))
                    }
                },
                other => return Err(err(line, format!("unknown directive '{other}'"))),
            }
        }

        let (_, alphabet) = alphabet.ok_or_else(|| err(0, "missing 'alphabet:' line"))?;
        let (states_line, states) = states.ok_or_else(|| err(0, "missing 'states:' line"))?;
        let (start_line, start) = start.ok_or_else(|| err(0, "missing 'start:' line"))?;

        let state_set: BTreeSet<&str> = states.iter().map(String::as_str).collect();
        let symbol_set: BTreeSet<char> = alphabet.iter().copied().collect();
        if !state_set.contains(start.as_str()) {
            return Err(err(start_line, format!("unknown start state '{start}'")));
        }
        for (line, f) in &finals {
            if !state_set.contains(f.as_str()) {
                return Err(err(*line, format!("unknown final state '{f}'")));
            }
        }
        let mut transitions = Vec::new();
        for (line, from, l1, l2, to) in raw_trans {
            if !state_set.contains(from.as_str()) {
                return Err(err(line, format!("unknown state '{from}'")));
            }
            if !state_set.contains(to.as_str()) {
                return Err(err(line, format!("unknown state '{to}'")));
            }
            for label in [l1, l2].into_iter().flatten() {
                if !symbol_set.contains(&label) {
                    return Err(err(line, format!("unknown symbol '{label}'")));
                }
            }
            transitions.push(Transition::new(from, l1, l2, to));
        }

        Afsa::new(
            states,
            start,
            finals.into_iter().map(|(_, f)| f),
            alphabet,
            transitions,
        )
        .map_err(|e| match e {
            Error::InvalidArgument(msg) => err(states_line, msg),
            other => other,
        })
    }

    /// Canonical text form; `parse` of the result reproduces the automaton
    /// exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join_syms = |set: &BTreeSet<char>| {
            set.iter().map(char::to_string).collect::<Vec<_>>().join(" ")
        };
        writeln!(out, "alphabet: {}", join_syms(&self.alphabet)).unwrap();
        writeln!(
            out,
            "states: {}",
            self.states.iter().cloned().collect::<Vec<_>>().join(" ")
        )
        .unwrap();
        writeln!(out, "start: {}", self.start).unwrap();
        let finals = self.finals.iter().cloned().collect::<Vec<_>>().join(" ");
        if finals.is_empty() {
            writeln!(out, "final:").unwrap();
        } else {
            writeln!(out, "final: {finals}").unwrap();
        }
        let label = |l: Option<char>| l.map(String::from).unwrap_or_else(|| "-".into());
        for t in &self.transitions {
            writeln!(
                out,
                "trans: {} {} {} {}",
                t.from,
                label(t.first),
                label(t.second),
                t.to
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordproblem::{cayley_afsa, free_monoid_afsa, GeneratedSemigroup};

    #[test]
    fn free_monoid_serializes_to_five_lines() {
        let afsa = free_monoid_afsa(&['a']).unwrap();
        let text = afsa.to_text();
        assert_eq!(
            text,
            "alphabet: a\nstates: q0\nstart: q0\nfinal: q0\ntrans: q0 a a q0\n"
        );
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn dash_parses_as_empty_label() {
        let afsa = Afsa::parse(
            "alphabet: a\nstates: q0\nstart: q0\nfinal: q0\ntrans: q0 a - q0\n",
        )
        .unwrap();
        let t = afsa.transitions().iter().next().unwrap();
        assert_eq!(*t, Transition::new("q0", Some('a'), None, "q0"));
    }

    #[test]
    fn round_trip_on_a_cayley_automaton() {
        let gs = GeneratedSemigroup::cyclic(2, 'g').unwrap();
        let afsa = cayley_afsa(&gs).unwrap();
        assert_eq!(Afsa::parse(&afsa.to_text()).unwrap(), afsa);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let missing_start = "alphabet: a\nstates: q0\nfinal: q0\n";
        assert_eq!(
            Afsa::parse(missing_start),
            Err(Error::Parse {
                line: 0,
                msg: "missing 'start:' line".into()
            })
        );

        let unknown_state = "alphabet: a\nstates: q0\nstart: q0\nfinal: q0\ntrans: q0 a a q9\n";
        assert!(matches!(
            Afsa::parse(unknown_state),
            Err(Error::Parse { line: 5, .. })
        ));

        let unknown_symbol = "alphabet: a\nstates: q0\nstart: q0\ntrans: q0 b a q0\n";
        assert!(matches!(
            Afsa::parse(unknown_symbol),
            Err(Error::Parse { line: 4, .. })
        ));

        let malformed = "alphabet: a\nstates: q0\nstart: q0\ntrans: q0 a q0\n";
        assert!(matches!(
            Afsa::parse(malformed),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# an automaton\nalphabet: a\n\nstates: q0\nstart: q0 # the only state\nfinal: q0\n";
        let afsa = Afsa::parse(text).unwrap();
        assert_eq!(afsa.state_count(), 1);
        assert!(afsa.transitions().is_empty());
    }
}
