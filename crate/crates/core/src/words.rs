//! Words over the generators `σ, τ, γ, a, b` of `Z^n x| S_n`, evaluated in the
//! concrete group.
//!
//! The generators are
//!
//! ```text
//! σ = b = ((0, .., 0), (2, 1, 3, .., n))
//! τ     = ((0, .., 0), (n, 1, 2, .., n-1))
//! γ     = ((0, .., 0, 1), id)
//! a     = γτ = ((0, .., 0, 1), (n, 1, 2, .., n-1))
//! ```
//!
//! Relations stated as `L = R` are stored as the single word `L R^{-1}`, which
//! must evaluate to the identity. Verification here only establishes that
//! relations hold in the group; it does not show that a relation set is a
//! complete presentation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::semidirect::SemiElement;
use crate::{Error, IntVector, Permutation, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Sigma,
    Tau,
    Gamma,
    A,
    B,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::Sigma, Symbol::Tau, Symbol::Gamma, Symbol::A, Symbol::B];

    /// Single-letter spelling used by the word grammar.
    pub fn letter(self) -> char {
        match self {
            Symbol::Sigma => 's',
            Symbol::Tau => 't',
            Symbol::Gamma => 'g',
            Symbol::A => 'a',
            Symbol::B => 'b',
        }
    }

    pub fn from_letter(c: char) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.letter() == c)
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Sigma => "sigma",
            Symbol::Tau => "tau",
            Symbol::Gamma => "gamma",
            Symbol::A => "a",
            Symbol::B => "b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub exponent: i64,
}

/// A freely reduced word: no zero exponents and no two adjacent letters with the
/// same symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(symbol: Symbol, exponent: i64) -> Self {
        let mut w = Word::empty();
        w.push(symbol, exponent);
        w
    }

    /// Builds a word from `(symbol, exponent)` pairs, normalising as it goes.
    pub fn from_pairs(pairs: &[(Symbol, i64)]) -> Self {
        let mut w = Word::empty();
        for &(symbol, exponent) in pairs {
            w.push(symbol, exponent);
        }
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, symbol: Symbol, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.symbol == symbol {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push(Letter { symbol, exponent });
    }

    pub fn then(mut self, other: &Word) -> Word {
        for l in &other.letters {
            self.push(l.symbol, l.exponent);
        }
        self
    }

    /// `(uv)^{-1} = v^{-1} u^{-1}`.
    pub fn inverse(&self) -> Word {
        let mut w = Word::empty();
        for l in self.letters.iter().rev() {
            w.push(l.symbol, -l.exponent);
        }
        w
    }

    pub fn pow(&self, k: i64) -> Word {
        if let [l] = self.letters.as_slice() {
            return Word::letter(l.symbol, l.exponent * k);
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Word::empty(), |acc, _| acc.then(&base))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.letters.iter().map(|l| l.symbol)
    }
}

/// Concatenate words.
macro_rules! word {
    ($($w:expr),* $(,)?) => {{
        let mut acc = Word::empty();
        $( acc = acc.then(&$w); )*
        acc
    }};
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", l.symbol.letter())?;
            if l.exponent != 1 {
                write!(f, "^{}", l.exponent)?;
            }
        }
        Ok(())
    }
}

/// Parses the word grammar
///
/// ```text
/// word := term*
/// term := atom ['^' integer]
/// atom := 's' | 't' | 'g' | 'a' | 'b' | 'e' | '(' term+ ')'
/// ```
///
/// `e` is the empty word. Whitespace may separate terms.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let (word, _) = parser.sequence()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok(word)
}

/// Largest expansion the parser allows for a parenthesised power.
pub const MAX_EXPANDED_LETTERS: u64 = 1 << 20;

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn sequence(&mut self) -> Result<(Word, usize)> {
        let mut word = Word::empty();
        let mut terms = 0;
        while let Some(c) = self.peek() {
            if c == b')' {
                break;
            }
            word = word.then(&self.term()?);
            terms += 1;
        }
        Ok((word, terms))
    }

    fn term(&mut self) -> Result<Word> {
        let c = self.peek().ok_or_else(|| self.error("expected a term"))?;
        let atom = match c {
            b'(' => {
                self.pos += 1;
                let (inner, terms) = self.sequence()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                if terms == 0 {
                    return Err(self.error("empty group"));
                }
                self.pos += 1;
                inner
            }
            b'e' => {
                self.pos += 1;
                Word::empty()
            }
            _ => match Symbol::from_letter(c as char) {
                Some(symbol) => {
                    self.pos += 1;
                    Word::letter(symbol, 1)
                }
                None => return Err(self.error("unknown symbol")),
            },
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let start = self.pos;
            let k = self.integer()?;
            if atom.len() > 1 && (atom.len() as u64).saturating_mul(k.unsigned_abs()) > MAX_EXPANDED_LETTERS {
                return Err(Error::Syntax {
                    position: start,
                    message: "group power expands beyond the letter limit".into(),
                });
            }
            Ok(atom.pow(k))
        } else {
            Ok(atom)
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.bytes.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("");
        let value: i64 = text.parse().map_err(|_| Error::Syntax {
            position: start,
            message: "expected an integer exponent".into(),
        })?;
        if value == 0 {
            return Err(Error::Syntax {
                position: start,
                message: "zero exponent".into(),
            });
        }
        Ok(value)
    }
}

/// Images of the five generator symbols in `Z^n x| S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    pub sigma: SemiElement,
    pub tau: SemiElement,
    pub gamma: SemiElement,
    pub a: SemiElement,
    pub b: SemiElement,
}

impl Generators {
    pub fn get(&self, symbol: Symbol) -> &SemiElement {
        match symbol {
            Symbol::Sigma => &self.sigma,
            Symbol::Tau => &self.tau,
            Symbol::Gamma => &self.gamma,
            Symbol::A => &self.a,
            Symbol::B => &self.b,
        }
    }
}

pub fn standard_generators(n: usize) -> Result<Generators> {
    Error::check_size(n, 2, usize::MAX)?;
    let sigma = SemiElement::permutation(Permutation::transposition(n, 1, 2));
    let tau = SemiElement::permutation(Permutation::cyclic_shift(n));
    let mut last = IntVector::zeros(n).into_inner();
    last[n - 1] = 1;
    let gamma = SemiElement::translation(last.into());
    let a = gamma.mul(&tau)?;
    Ok(Generators {
        b: sigma.clone(),
        sigma,
        tau,
        gamma,
        a,
    })
}

/// Evaluates a word at the standard generators.
pub fn eval_word(w: &Word, n: usize) -> Result<SemiElement> {
    eval_with(w, &standard_generators(n)?)
}

/// Evaluates a word at the given generator images.
pub fn eval_with(w: &Word, gens: &Generators) -> Result<SemiElement> {
    let n = gens.sigma.n();
    w.letters().iter().try_fold(SemiElement::identity(n), |acc, l| {
        acc.mul(&gens.get(l.symbol).pow(l.exponent)?)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetKind {
    /// Two-generator presentation of `S_n` in `σ, τ`.
    Sn,
    /// `Sn` plus the two `γ` commutation families.
    ThreeGen,
    /// Presentation in `a, b`.
    TwoGen,
}

impl PresetKind {
    pub fn name(self) -> &'static str {
        match self {
            PresetKind::Sn => "sn",
            PresetKind::ThreeGen => "three-gen",
            PresetKind::TwoGen => "two-gen",
        }
    }

    pub fn alphabet(self) -> &'static [Symbol] {
        match self {
            PresetKind::Sn => &[Symbol::Sigma, Symbol::Tau],
            PresetKind::ThreeGen => &[Symbol::Sigma, Symbol::Tau, Symbol::Gamma],
            PresetKind::TwoGen => &[Symbol::A, Symbol::B],
        }
    }
}

impl core::str::FromStr for PresetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sn" => Ok(PresetKind::Sn),
            "three-gen" | "three_gen" => Ok(PresetKind::ThreeGen),
            "two-gen" | "two_gen" => Ok(PresetKind::TwoGen),
            other => Err(Error::InvalidArgument(format!("unknown preset {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Family label, e.g. `"(s t^m s t^-m)^2"`.
    pub family: String,
    pub parameter: Option<i64>,
    /// Must evaluate to the identity.
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPreset {
    pub kind: PresetKind,
    pub n: usize,
    pub relations: Vec<Relation>,
}

impl RelationPreset {
    /// Symbols used by some relation but outside the preset's alphabet.
    pub fn foreign_symbols(&self) -> Vec<Symbol> {
        let alphabet = self.kind.alphabet();
        let mut out: Vec<Symbol> = self
            .relations
            .iter()
            .flat_map(|r| r.word.symbols())
            .filter(|s| !alphabet.contains(s))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn sym(symbol: Symbol, k: i64) -> Word {
    Word::letter(symbol, k)
}

fn rel(family: &str, parameter: Option<i64>, word: Word) -> Relation {
    Relation {
        family: family.into(),
        parameter,
        word,
    }
}

/// `L R^{-1}` for the equation `L = R`.
fn equation(lhs: &Word, rhs: &Word) -> Word {
    lhs.clone().then(&rhs.inverse())
}

fn sn_relations(n: i64) -> Vec<Relation> {
    use Symbol::{Sigma as S, Tau as T};
    let mut out = alloc::vec![
        rel("s^2", None, sym(S, 2)),
        rel("(s t s t^-1)^3", None, word![sym(S, 1), sym(T, 1), sym(S, 1), sym(T, -1)].pow(3)),
    ];
    for m in 2..=n - 2 {
        out.push(rel(
            "(s t^m s t^-m)^2",
            Some(m),
            word![sym(S, 1), sym(T, m), sym(S, 1), sym(T, -m)].pow(2),
        ));
    }
    out.push(rel(
        "(s t)^(n-1) = t^n",
        None,
        equation(&word![sym(S, 1), sym(T, 1)].pow(n - 1), &sym(T, n)),
    ));
    out
}

/// Conjugate `τ^k x τ^{-k}`.
fn tau_conjugate(k: i64, x: &Word) -> Word {
    word![sym(Symbol::Tau, k), x.clone(), sym(Symbol::Tau, -k)]
}

fn gamma_commutes_with(x: &Word) -> Word {
    let g = sym(Symbol::Gamma, 1);
    equation(&word![g.clone(), x.clone()], &word![x.clone(), g])
}

/// Relation sets for the three presets.
pub fn relation_preset(n: usize, kind: PresetKind) -> Result<RelationPreset> {
    match kind {
        PresetKind::Sn | PresetKind::ThreeGen => Error::check_size(n, 4, usize::MAX)?,
        PresetKind::TwoGen => Error::check_size(n, 2, usize::MAX)?,
    }
    let m = n as i64;
    let relations = match kind {
        PresetKind::Sn => sn_relations(m),
        PresetKind::ThreeGen => {
            let mut out = sn_relations(m);
            for k in 0..=m - 3 {
                let x = tau_conjugate(k, &sym(Symbol::Sigma, 1));
                out.push(rel("g t^k s t^-k = t^k s t^-k g", Some(k), gamma_commutes_with(&x)));
            }
            for l in 1..=m - 1 {
                let y = tau_conjugate(l, &sym(Symbol::Gamma, 1));
                out.push(rel("g t^l g t^-l = t^l g t^-l g", Some(l), gamma_commutes_with(&y)));
            }
            out
        }
        PresetKind::TwoGen => {
            use Symbol::{A, B};
            let mut out = alloc::vec![rel("b^2", None, sym(B, 2))];
            if n >= 3 {
                out.push(rel(
                    "(b a b a^-1)^3",
                    None,
                    word![sym(B, 1), sym(A, 1), sym(B, 1), sym(A, -1)].pow(3),
                ));
            }
            for k in 2..=m - 2 {
                out.push(rel(
                    "(b a^k b a^-k)^2",
                    Some(k),
                    word![sym(B, 1), sym(A, k), sym(B, 1), sym(A, -k)].pow(2),
                ));
            }
            out.push(rel(
                "b a^n b a^-n",
                None,
                word![sym(B, 1), sym(A, m), sym(B, 1), sym(A, -m)],
            ));
            out
        }
    };
    Ok(RelationPreset { kind, n, relations })
}

/// One evaluated relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: String,
    pub parameter: Option<i64>,
    pub word: String,
    pub value: SemiElement,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub preset: PresetKind,
    pub n: usize,
    pub entries: Vec<RelationCheck>,
    pub pass: bool,
}

/// Printed with every relation report.
pub const HOLDS_ONLY_NOTE: &str =
    "checks that each relation holds in Z^n x| S_n; completeness of the presentation is not checked";

pub fn verify_relations(preset: &RelationPreset) -> Result<RelationReport> {
    let gens = standard_generators(preset.n)?;
    let entries = preset
        .relations
        .iter()
        .map(|r| {
            let value = eval_with(&r.word, &gens)?;
            Ok(RelationCheck {
                family: r.family.clone(),
                parameter: r.parameter,
                word: format!("{}", r.word),
                holds: value.is_identity(),
                value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport {
        preset: preset.kind,
        n: preset.n,
        pass: entries.iter().all(|e| e.holds),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// 1 through 7, in the order listed on [`verify_derived_identities`].
    pub identity: u8,
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub lhs_value: SemiElement,
    pub rhs_value: SemiElement,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub entries: Vec<IdentityCheck>,
    pub pass: bool,
}

impl IdentityReport {
    pub fn by_identity(&self, identity: u8) -> impl Iterator<Item = &IdentityCheck> {
        self.entries.iter().filter(move |e| e.identity == identity)
    }
}

/// Exponent range used for the `γ` commutation identities by default.
pub const DEFAULT_GAMMA_EXPONENTS: RangeInclusive<i64> = -5..=5;

/// Checks by evaluation, for `n >= 4`:
///
/// 1. `σ_i = τ^{i-1} σ τ^{1-i}` for `1 <= i <= n-1`, `σ_i` swapping `i, i+1`;
/// 2. `τ^n = e`;
/// 3. `τ = a^{-1} (b a)^{n-2} b a^{3-n}`;
/// 4. `γ = a^{n-2} b (a^{-1} b)^{n-2} a`;
/// 5. `a^n b = b a^n`;
/// 6. `(a^{-1} b)^{n-k} a^{n-k} b a^{-1} = a^{-1} b a b a^{-2} b (a^{-1} b)^{n-k-2} a^{n-k-1}`
///    for `2 <= k <= n-2`;
/// 7. `γ^x τ^l γ^y τ^{-l} = τ^l γ^y τ^{-l} γ^x` for `1 <= l <= n-1` and
///    `γ^x τ^k σ τ^{-k} = τ^k σ τ^{-k} γ^x` for `0 <= k <= n-3`, over all
///    exponents `x, y` in [`DEFAULT_GAMMA_EXPONENTS`].
///
/// For `n` in `{2, 3}` only (1) and (2) are checked.
pub fn verify_derived_identities(n: usize) -> Result<IdentityReport> {
    verify_derived_identities_with(n, DEFAULT_GAMMA_EXPONENTS)
}

pub fn verify_derived_identities_with(
    n: usize,
    gamma_exponents: RangeInclusive<i64>,
) -> Result<IdentityReport> {
    use Symbol::{Gamma as G, Sigma as S, Tau as T, A, B};
    let mut checker = IdentityChecker {
        gens: standard_generators(n)?,
        entries: Vec::new(),
    };
    let m = n as i64;

    for i in 1..m {
        let rhs = SemiElement::permutation(Permutation::transposition(n, i as usize, i as usize + 1));
        checker.against_element(
            1,
            format!("sigma_{i} = t^(i-1) s t^(1-i), i={i}"),
            tau_conjugate(i - 1, &sym(S, 1)),
            format!("sigma_{i}"),
            rhs,
        )?;
    }
    checker.against_word(2, "t^n = e".into(), sym(T, m), Word::empty())?;

    if n >= 4 {
        let ab = word![sym(A, -1), sym(B, 1)];
        let ba = word![sym(B, 1), sym(A, 1)];
        checker.against_word(
            3,
            "t = a^-1 (b a)^(n-2) b a^(3-n)".into(),
            sym(T, 1),
            word![sym(A, -1), ba.pow(m - 2), sym(B, 1), sym(A, 3 - m)],
        )?;
        checker.against_word(
            4,
            "g = a^(n-2) b (a^-1 b)^(n-2) a".into(),
            sym(G, 1),
            word![sym(A, m - 2), sym(B, 1), ab.pow(m - 2), sym(A, 1)],
        )?;
        checker.against_word(
            5,
            "a^n b = b a^n".into(),
            word![sym(A, m), sym(B, 1)],
            word![sym(B, 1), sym(A, m)],
        )?;
        for k in 2..=m - 2 {
            checker.against_word(
                6,
                format!("(a^-1 b)^(n-k) a^(n-k) b a^-1 = a^-1 b a b a^-2 b (a^-1 b)^(n-k-2) a^(n-k-1), k={k}"),
                word![ab.pow(m - k), sym(A, m - k), sym(B, 1), sym(A, -1)],
                word![
                    sym(A, -1),
                    sym(B, 1),
                    sym(A, 1),
                    sym(B, 1),
                    sym(A, -2),
                    sym(B, 1),
                    ab.pow(m - k - 2),
                    sym(A, m - k - 1)
                ],
            )?;
        }
        for x in gamma_exponents.clone() {
            for l in 1..m {
                for y in gamma_exponents.clone() {
                    let conj = tau_conjugate(l, &sym(G, y));
                    checker.against_word(
                        7,
                        format!("g^x t^l g^y t^-l = t^l g^y t^-l g^x, x={x} l={l} y={y}"),
                        word![sym(G, x), conj.clone()],
                        word![conj, sym(G, x)],
                    )?;
                }
            }
            for k in 0..=m - 3 {
                let conj = tau_conjugate(k, &sym(S, 1));
                checker.against_word(
                    7,
                    format!("g^x t^k s t^-k = t^k s t^-k g^x, x={x} k={k}"),
                    word![sym(G, x), conj.clone()],
                    word![conj, sym(G, x)],
                )?;
            }
        }
    }

    let entries = checker.entries;
    Ok(IdentityReport {
        n,
        pass: entries.iter().all(|e| e.holds),
        entries,
    })
}

struct IdentityChecker {
    gens: Generators,
    entries: Vec<IdentityCheck>,
}

impl IdentityChecker {
    fn against_word(&mut self, identity: u8, label: String, lhs: Word, rhs: Word) -> Result<()> {
        let rhs_value = eval_with(&rhs, &self.gens)?;
        self.against_element(identity, label, lhs, format!("{rhs}"), rhs_value)
    }

    fn against_element(
        &mut self,
        identity: u8,
        label: String,
        lhs: Word,
        rhs: String,
        rhs_value: SemiElement,
    ) -> Result<()> {
        let lhs_value = eval_with(&lhs, &self.gens)?;
        self.entries.push(IdentityCheck {
            identity,
            label,
            lhs: format!("{lhs}"),
            rhs,
            holds: lhs_value == rhs_value,
            lhs_value,
            rhs_value,
        });
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Symbol::*;

    fn se<const N: usize>(z: [i64; N], s: [usize; N]) -> SemiElement {
        SemiElement::new(z.into(), Permutation::from_images(s.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_word("b^2").unwrap(), Word::from_pairs(&[(B, 2)]));
        assert_eq!(
            parse_word("(b a)^2 b").unwrap(),
            Word::from_pairs(&[(B, 1), (A, 1), (B, 1), (A, 1), (B, 1)])
        );
        let w = parse_word("a^-1 (b a)^2 b a^-1").unwrap();
        assert_eq!(
            w,
            Word::from_pairs(&[(A, -1), (B, 1), (A, 1), (B, 1), (A, 1), (B, 1), (A, -1)])
        );
        assert_eq!(w.len(), 7);
        assert_eq!(parse_word("(b a)^-1").unwrap(), Word::from_pairs(&[(A, -1), (B, -1)]));
        assert_eq!(parse_word("a a^-1").unwrap(), Word::empty());
        assert_eq!(parse_word("").unwrap(), Word::empty());
        assert_eq!(parse_word("e").unwrap(), Word::empty());
        assert_eq!(parse_word("ab^3").unwrap(), Word::from_pairs(&[(A, 1), (B, 3)]));
        assert_eq!(parse_word("((s t)^2 g)^-2").unwrap().len(), 10);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            parse_word("a^0"),
            Err(Error::Syntax { position: 2, message: "zero exponent".into() })
        );
        assert!(matches!(parse_word("a x"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_word("(a b"), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(parse_word("a)"), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_word("()"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("a^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("(a b)^99999999"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn render_examples() {
        assert_eq!(format!("{}", Word::empty()), "e");
        assert_eq!(format!("{}", parse_word("a^-1 (b a)^2").unwrap()), "a^-1 b a b a");
    }

    #[test]
    fn generator_images() {
        let g = standard_generators(4).unwrap();
        assert_eq!(g.a, se([0, 0, 0, 1], [4, 1, 2, 3]));
        assert_eq!(g.b, se([0, 0, 0, 0], [2, 1, 3, 4]));
        for n in 2..9 {
            let g = standard_generators(n).unwrap();
            assert_eq!(g.gamma.mul(&g.tau).unwrap(), g.a);
            assert_eq!(g.sigma, g.b);
        }
        assert!(standard_generators(1).is_err());
    }

    #[test]
    fn eval_examples() {
        assert!(eval_word(&Word::empty(), 4).unwrap().is_identity());
        assert_eq!(
            eval_word(&parse_word("a^4").unwrap(), 4).unwrap(),
            se([1, 1, 1, 1], [1, 2, 3, 4])
        );
        assert_eq!(
            eval_word(&parse_word("a^-1 (b a)^2 b a^-1").unwrap(), 4).unwrap(),
            se([0, 0, 0, 0], [4, 1, 2, 3])
        );
    }

    #[test]
    fn preset_shapes() {
        let two = relation_preset(2, PresetKind::TwoGen).unwrap();
        let words: Vec<String> = two.relations.iter().map(|r| format!("{}", r.word)).collect();
        assert_eq!(words, ["b^2", "b a^2 b a^-2"]);
        let three = relation_preset(3, PresetKind::TwoGen).unwrap();
        let words: Vec<String> = three.relations.iter().map(|r| format!("{}", r.word)).collect();
        assert_eq!(words, ["b^2", "b a b a^-1 b a b a^-1 b a b a^-1", "b a^3 b a^-3"]);
        assert_eq!(relation_preset(5, PresetKind::TwoGen).unwrap().relations.len(), 5);
        assert!(relation_preset(3, PresetKind::Sn).is_err());
        assert!(relation_preset(3, PresetKind::ThreeGen).is_err());
        assert!(relation_preset(1, PresetKind::TwoGen).is_err());
        // sn: 2 + (n - 3) + 1; three-gen adds (n - 2) + (n - 1)
        assert_eq!(relation_preset(6, PresetKind::Sn).unwrap().relations.len(), 6);
        assert_eq!(relation_preset(6, PresetKind::ThreeGen).unwrap().relations.len(), 15);
        for kind in [PresetKind::Sn, PresetKind::ThreeGen, PresetKind::TwoGen] {
            assert!(relation_preset(6, kind).unwrap().foreign_symbols().is_empty());
        }
    }

    #[test]
    fn presets_hold() {
        for n in 2..=8 {
            for kind in [PresetKind::Sn, PresetKind::ThreeGen, PresetKind::TwoGen] {
                if let Ok(preset) = relation_preset(n, kind) {
                    let report = verify_relations(&preset).unwrap();
                    assert!(report.pass, "{} n={n}: {:?}", kind.name(), report.entries);
                }
            }
        }
    }

    #[test]
    fn mutated_relation_is_isolated() {
        let mut preset = relation_preset(4, PresetKind::TwoGen).unwrap();
        preset.relations.push(Relation {
            family: "(b a^2 b a^-2)^3".into(),
            parameter: None,
            word: parse_word("(b a^2 b a^-2)^3").unwrap(),
        });
        let report = verify_relations(&preset).unwrap();
        assert!(!report.pass);
        let failing: Vec<_> = report.entries.iter().filter(|e| !e.holds).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].family, "(b a^2 b a^-2)^3");
    }

    #[test]
    fn identity_examples() {
        let r5 = verify_derived_identities(5).unwrap();
        let tau5: Vec<_> = r5.by_identity(2).collect();
        assert!(tau5[0].lhs_value.is_identity());
        let r4 = verify_derived_identities(4).unwrap();
        let third = r4.by_identity(3).next().unwrap();
        assert_eq!(third.rhs_value, se([0, 0, 0, 0], [4, 1, 2, 3]));
        assert!(third.holds);
        let fifth = r4.by_identity(5).next().unwrap();
        assert_eq!(fifth.lhs_value, se([1, 1, 1, 1], [2, 1, 3, 4]));
        assert!(fifth.holds);
        for n in 2..=8 {
            let report = verify_derived_identities(n).unwrap();
            assert!(report.pass, "n={n}");
            let expected: &[u8] = if n >= 4 { &[1, 2, 3, 4, 5, 6, 7] } else { &[1, 2] };
            for id in 1..=7u8 {
                assert_eq!(report.by_identity(id).next().is_some(), expected.contains(&id), "n={n} id={id}");
            }
        }
    }

    #[test]
    fn a_wrong_gamma_word_is_caught() {
        let gens = standard_generators(5).unwrap();
        let wrong = parse_word("a^3 b (a^-1 b)^3").unwrap();
        assert_ne!(eval_with(&wrong, &gens).unwrap(), gens.gamma);
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec((0usize..5, -4i64..=4), 0..12).prop_map(|pairs| {
            let pairs: Vec<(Symbol, i64)> = pairs.into_iter().map(|(s, k)| (Symbol::ALL[s], k)).collect();
            Word::from_pairs(&pairs)
        })
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(w in word_strategy()) {
            prop_assert_eq!(parse_word(&format!("{w}")).unwrap(), w);
        }

        #[test]
        fn eval_is_homomorphism(u in word_strategy(), v in word_strategy(), n in 2usize..7) {
            let gens = standard_generators(n).unwrap();
            let joined = u.clone().then(&v);
            prop_assert_eq!(
                eval_with(&joined, &gens).unwrap(),
                eval_with(&u, &gens).unwrap().mul(&eval_with(&v, &gens).unwrap()).unwrap()
            );
            prop_assert!(eval_with(&u.clone().then(&u.inverse()), &gens).unwrap().is_identity());
        }
    }
}
