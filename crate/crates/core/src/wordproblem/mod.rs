//! Word problems of generated semigroups.
//!
//! A [`GeneratedSemigroup`] ties a semigroup model to a generating alphabet
//! through a projection map. Its two-tape word problem is the set of pairs
//! of non-empty words that project to the same element; this module builds
//! automata for the recognizable cases (free monoids, finite semigroups via
//! the Cayley graph) and checks automata against the projection oracle at
//! bounded word lengths.

mod file;

pub use file::parse_model_file;

use std::collections::BTreeMap;

use crate::afsa::{Afsa, Transition, WordPair};
use crate::algebra::free_inverse;
use crate::algebra::{BicyclicElement, FiniteSemigroup, FreeInverseTriple, PartialInjection};
use crate::error::{Error, Result};

/// The semigroup models a word problem can be posed over.
#[derive(Debug, Clone, PartialEq)]
pub enum SemigroupModel {
    Finite(FiniteSemigroup),
    Bicyclic,
    FreeMonoid,
    FreeInverse,
    PartialInjections { ground: usize },
}

/// An element of one of the models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Finite(usize),
    Bicyclic(BicyclicElement),
    FreeWord(String),
    Triple(FreeInverseTriple),
    Injection(PartialInjection),
}

impl SemigroupModel {
    fn element_fits(&self, e: &Element) -> bool {
        match (self, e) {
            (SemigroupModel::Finite(fs), Element::Finite(k)) => *k < fs.size(),
            (SemigroupModel::Bicyclic, Element::Bicyclic(_)) => true,
            (SemigroupModel::FreeMonoid, Element::FreeWord(_)) => true,
            (SemigroupModel::FreeInverse, Element::Triple(_)) => true,
            (SemigroupModel::PartialInjections { ground }, Element::Injection(f)) => {
                f.ground_size() == *ground
            }
            _ => false,
        }
    }

    /// Multiplication of the model.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        if !self.element_fits(a) || !self.element_fits(b) {
            return Err(Error::InvalidArgument(
                "element does not belong to this model".into(),
            ));
        }
        Ok(match (self, a, b) {
            (SemigroupModel::Finite(fs), Element::Finite(x), Element::Finite(y)) => {
                Element::Finite(fs.product(*x, *y))
            }
            (SemigroupModel::Bicyclic, Element::Bicyclic(x), Element::Bicyclic(y)) => {
                Element::Bicyclic(*x * *y)
            }
            (SemigroupModel::FreeMonoid, Element::FreeWord(x), Element::FreeWord(y)) => {
                Element::FreeWord(format!("{x}{y}"))
            }
            (SemigroupModel::FreeInverse, Element::Triple(x), Element::Triple(y)) => {
                Element::Triple(*x * *y)
            }
            (SemigroupModel::PartialInjections { .. }, Element::Injection(x), Element::Injection(y)) => {
                Element::Injection(x.compose(y)?)
            }
            _ => unreachable!("kinds checked above"),
        })
    }

    /// Human-readable form of an element, in the model's own notation.
    pub fn element_text(&self, e: &Element) -> String {
        match (self, e) {
            (SemigroupModel::Finite(fs), Element::Finite(k)) => fs.name(*k).to_string(),
            (_, Element::Bicyclic(x)) => x.to_string(),
            (_, Element::FreeWord(w)) => w.clone(),
            (_, Element::Triple(t)) => t.to_string(),
            (_, Element::Injection(f)) => f.to_string(),
            _ => format!("{e:?}"),
        }
    }
}

/// A semigroup model together with a generating alphabet and the projection
/// of each generator.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSemigroup {
    model: SemigroupModel,
    gen_map: BTreeMap<char, Element>,
}

impl GeneratedSemigroup {
    pub fn new(model: SemigroupModel, gen_map: BTreeMap<char, Element>) -> Result<Self> {
        if gen_map.is_empty() {
            return Err(Error::InvalidArgument("a generating set cannot be empty".into()));
        }
        for (sym, elem) in &gen_map {
            if !model.element_fits(elem) {
                return Err(Error::InvalidArgument(format!(
                    "generator '{sym}' maps outside the model"
                )));
            }
        }
        Ok(Self { model, gen_map })
    }

    /// The free monogenic inverse semigroup over `{x, X}`, `X` standing for
    /// the inverse of the generator.
    pub fn free_inverse() -> Self {
        let gen = FreeInverseTriple::generator();
        let gen_map = BTreeMap::from([
            (free_inverse::GEN, Element::Triple(gen)),
            (free_inverse::GEN_INV, Element::Triple(gen.inverse())),
        ]);
        Self {
            model: SemigroupModel::FreeInverse,
            gen_map,
        }
    }

    /// The free monoid on the given symbols (each projecting to itself).
    pub fn free_monoid(symbols: &[char]) -> Result<Self> {
        let gen_map = symbols
            .iter()
            .map(|&s| (s, Element::FreeWord(s.to_string())))
            .collect();
        Self::new(SemigroupModel::FreeMonoid, gen_map)
    }

    /// The bicyclic monoid over `{b, c}`.
    pub fn bicyclic() -> Self {
        let gen_map = BTreeMap::from([
            ('b', Element::Bicyclic(BicyclicElement::b())),
            ('c', Element::Bicyclic(BicyclicElement::c())),
        ]);
        Self {
            model: SemigroupModel::Bicyclic,
            gen_map,
        }
    }

    /// The cyclic group of order `n`, generated by `symbol`.
    pub fn cyclic(n: usize, symbol: char) -> Result<Self> {
        let group = FiniteSemigroup::cyclic_group(n)?;
        let generator = 1 % group.size();
        Self::new(
            SemigroupModel::Finite(group),
            BTreeMap::from([(symbol, Element::Finite(generator))]),
        )
    }

    /// A finite semigroup with named generator images.
    pub fn finite(semigroup: FiniteSemigroup, gens: &[(char, &str)]) -> Result<Self> {
        let mut gen_map = BTreeMap::new();
        for &(sym, name) in gens {
            let idx = semigroup
                .index_of(name)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown element '{name}'")))?;
            gen_map.insert(sym, Element::Finite(idx));
        }
        Self::new(SemigroupModel::Finite(semigroup), gen_map)
    }

    /// A semigroup of partial injections on a common ground set.
    pub fn injections(gens: &[(char, PartialInjection)]) -> Result<Self> {
        let ground = gens
            .first()
            .map(|(_, f)| f.ground_size())
            .ok_or_else(|| Error::InvalidArgument("a generating set cannot be empty".into()))?;
        let gen_map = gens
            .iter()
            .map(|(sym, f)| (*sym, Element::Injection(f.clone())))
            .collect();
        Self::new(SemigroupModel::PartialInjections { ground }, gen_map)
    }

    pub fn model(&self) -> &SemigroupModel {
        &self.model
    }

    pub fn alphabet(&self) -> Vec<char> {
        self.gen_map.keys().copied().collect()
    }

    pub fn generator(&self, symbol: char) -> Option<&Element> {
        self.gen_map.get(&symbol)
    }

    /// Projects a non-empty word onto the model by folding the model's
    /// multiplication over the generator images.
    pub fn project(&self, word: &str) -> Result<Element> {
        let mut acc: Option<Element> = None;
        for c in word.chars() {
            let img = self
                .gen_map
                .get(&c)
                .ok_or(Error::SymbolOutsideAlphabet(c))?;
            acc = Some(match acc {
                None => img.clone(),
                Some(prev) => self.model.mul(&prev, img)?,
            });
        }
        acc.ok_or(Error::EmptyWord)
    }

    /// Whether `(u, v)` belongs to the word problem, i.e. both non-empty
    /// words project to the same element.
    pub fn wp_contains(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.project(u)? == self.project(v)?)
    }

    /// All word-problem pairs with word lengths in `1..=max_len`, sorted by
    /// (|first|, |second|, first, second).
    pub fn enumerate_word_problem(&self, max_len: usize) -> Vec<WordPair> {
        let words = words_by_length(&self.alphabet(), max_len);
        let mut out = Vec::new();
        for len_u in 1..=max_len {
            for len_v in 1..=max_len {
                for u in &words[len_u] {
                    for v in &words[len_v] {
                        if self.wp_contains(u, v).expect("alphabet words") {
                            out.push(WordPair::new(u.clone(), v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Non-empty (and, at index 0, the empty) words over `symbols`, grouped by
/// length, each group in lexicographic symbol order.
fn words_by_length(symbols: &[char], max_len: usize) -> Vec<Vec<String>> {
    let mut words: Vec<Vec<String>> = vec![vec![String::new()]];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &words[len - 1] {
            for &s in symbols {
                let mut ext = w.clone();
                ext.push(s);
                next.push(ext);
            }
        }
        words.push(next);
    }
    words
}

/// The one-state automaton recognizing the word problem of the free monoid:
/// a single start-and-final state with a transition `(q0, a, a, q0)` per
/// symbol.
pub fn free_monoid_afsa(alphabet: &[char]) -> Result<Afsa> {
    if alphabet.is_empty() {
        return Err(Error::InvalidArgument("alphabet cannot be empty".into()));
    }
    Afsa::new(
        ["q0"],
        "q0",
        ["q0"],
        alphabet.iter().copied(),
        alphabet
            .iter()
            .map(|&a| Transition::new("q0", Some(a), Some(a), "q0")),
    )
}

/// An automaton recognizing the word problem of a finite semigroup, built
/// from the right Cayley graph.
///
/// States are pairs over `S ∪ {⊥}` tracking the projection of each tape's
/// prefix (`⊥`, written `_`, marks a tape not yet read). Tape moves multiply
/// the matching component; finals are the diagonal pairs over `S`, so a pair
/// of non-empty words is accepted exactly when the two projections agree.
pub fn cayley_afsa(gs: &GeneratedSemigroup) -> Result<Afsa> {
    let SemigroupModel::Finite(fs) = gs.model() else {
        return Err(Error::NotFiniteModel);
    };
    let n = fs.size();
    // state names are "(s,t)" with "_" for an unread tape, so element names
    // must not be able to forge that shape
    for k in 0..n {
        let name = fs.name(k);
        if name == "_" || name.contains([',', '(', ')']) {
            return Err(Error::InvalidArgument(format!(
                "element name '{name}' cannot be used in Cayley state labels"
            )));
        }
    }
    let part = |x: Option<usize>| match x {
        None => "_".to_string(),
        Some(k) => fs.name(k).to_string(),
    };
    let name = |s: Option<usize>, t: Option<usize>| format!("({},{})", part(s), part(t));

    let choices = |include_none: bool| {
        let mut v: Vec<Option<usize>> = Vec::with_capacity(n + 1);
        if include_none {
            v.push(None);
        }
        v.extend((0..n).map(Some));
        v
    };
    let mut states = Vec::with_capacity((n + 1) * (n + 1));
    let mut transitions = Vec::new();
    for &s in &choices(true) {
        for &t in &choices(true) {
            states.push(name(s, t));
            for (&sym, elem) in &gs.gen_map {
                let Element::Finite(g) = elem else { unreachable!("finite model") };
                let mul = |x: Option<usize>| match x {
                    None => *g,
                    Some(k) => fs.product(k, *g),
                };
                transitions.push(Transition::new(
                    name(s, t),
                    Some(sym),
                    None,
                    name(Some(mul(s)), t),
                ));
                transitions.push(Transition::new(
                    name(s, t),
                    None,
                    Some(sym),
                    name(s, Some(mul(t))),
                ));
            }
        }
    }
    let finals: Vec<String> = (0..n).map(|k| name(Some(k), Some(k))).collect();
    Afsa::new(states, name(None, None), finals, gs.alphabet(), transitions)
}

/// Outcome of comparing an automaton against the projection oracle on all
/// pairs of non-empty words up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpReport {
    pub bound: usize,
    /// Word-problem pairs the automaton rejects.
    pub missed_pairs: Vec<WordPair>,
    /// Accepted pairs that are not in the word problem.
    pub extra_pairs: Vec<WordPair>,
}

impl WpReport {
    /// Empty report: the automaton agrees with the oracle up to the bound.
    pub fn is_empty(&self) -> bool {
        self.missed_pairs.is_empty() && self.extra_pairs.is_empty()
    }
}

/// Exhaustively compares `afsa` against the word problem of `gs` on all
/// pairs of non-empty words up to `max_len`. The two must share an alphabet.
pub fn check_afsa_against_oracle(
    afsa: &Afsa,
    gs: &GeneratedSemigroup,
    max_len: usize,
) -> Result<WpReport> {
    let alphabet = gs.alphabet();
    let afsa_alphabet: Vec<char> = afsa.alphabet().iter().copied().collect();
    if alphabet != afsa_alphabet {
        return Err(Error::AlphabetMismatch {
            expected: alphabet,
            found: afsa_alphabet,
        });
    }
    let words = words_by_length(&alphabet, max_len);
    let mut report = WpReport {
        bound: max_len,
        missed_pairs: Vec::new(),
        extra_pairs: Vec::new(),
    };
    for len_u in 1..=max_len {
        for len_v in 1..=max_len {
            for u in &words[len_u] {
                for v in &words[len_v] {
                    let valid = gs.wp_contains(u, v)?;
                    let accepted = afsa.accepts(&WordPair::new(u.clone(), v.clone()))?;
                    if valid && !accepted {
                        report.missed_pairs.push(WordPair::new(u.clone(), v.clone()));
                    } else if !valid && accepted {
                        report.extra_pairs.push(WordPair::new(u.clone(), v.clone()));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// First pair of non-empty words (in canonical order, lengths up to
/// `max_len`) on which the two word problems disagree, or `None` if they
/// agree throughout. The two semigroups must share an alphabet.
pub fn kernel_equal_up_to(
    a: &GeneratedSemigroup,
    b: &GeneratedSemigroup,
    max_len: usize,
) -> Result<Option<WordPair>> {
    let alphabet = a.alphabet();
    if alphabet != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: alphabet,
            found: b.alphabet(),
        });
    }
    let words = words_by_length(&alphabet, max_len);
    for len_u in 1..=max_len {
        for len_v in 1..=max_len {
            for u in &words[len_u] {
                for v in &words[len_v] {
                    if a.wp_contains(u, v)? != b.wp_contains(u, v)? {
                        return Ok(Some(WordPair::new(u.clone(), v.clone())));
                    }
                }
            }
        }
    }
    Ok(None)
}
