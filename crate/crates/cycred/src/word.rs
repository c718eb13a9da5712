//! Words over a signed alphabet, free reduction and cyclic reduction.
//!
//! A [`Word`] is an element of the free monoid over the letters `X ∪ X⁻¹`:
//! a finite sequence of signed generators, not necessarily reduced. The free
//! group sits inside the monoid as the set of *reduced* words (no adjacent
//! letter/inverse pair), and the cyclically reduced words are those whose
//! last letter is not the inverse of the first. Equality between `Word`
//! values is always letter-for-letter equality in the monoid; group-level
//! equality is expressed by reducing first.
//!
//! Text notation: a lowercase ASCII letter is a generator (`a` is generator
//! 1, `b` generator 2, …), the same letter uppercase is its inverse, and the
//! sole string `"1"` is the empty word. Words with more than 26 generators
//! are representable in memory but not in this notation.

use std::fmt;

use thiserror::Error;

/// Sign of a letter: `Plus` is a generator, `Minus` its formal inverse.
///
/// `Plus` sorts before `Minus`, so the canonical letter order is
/// `a < A < b < B < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A single signed generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    gen: u32,
    sign: Sign,
}

impl Letter {
    /// Creates a letter for generator `gen` (1-based) with the given sign.
    ///
    /// Panics if `gen` is zero.
    pub fn new(gen: u32, sign: Sign) -> Letter {
        assert!(gen >= 1, "generator indices are 1-based");
        Letter { gen, sign }
    }

    pub fn generator(&self) -> u32 {
        self.gen
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The formal inverse; an involution.
    pub fn inverse(&self) -> Letter {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        Letter { gen: self.gen, sign }
    }

    fn to_ascii(self) -> Option<char> {
        if self.gen > 26 {
            return None;
        }
        let base = match self.sign {
            Sign::Plus => b'a',
            Sign::Minus => b'A',
        };
        Some((base + (self.gen - 1) as u8) as char)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_ascii() {
            Some(c) => write!(f, "{c}"),
            None => match self.sign {
                Sign::Plus => write!(f, "<{}>", self.gen),
                Sign::Minus => write!(f, "<-{}>", self.gen),
            },
        }
    }
}

/// A word in the free monoid over `X ∪ X⁻¹`; possibly empty, possibly
/// unreduced. Immutable: every operation returns a fresh word.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The subword at `range`, as its own word.
    pub fn slice<R>(&self, range: R) -> Word
    where
        R: std::ops::RangeBounds<usize>,
    {
        use std::ops::Bound;
        let start = match range.start_bound() {
            Bound::Included(&s) => s,
            Bound::Excluded(&s) => s + 1,
            Bound::Unbounded => 0,
        };
        let end = match range.end_bound() {
            Bound::Included(&e) => e + 1,
            Bound::Excluded(&e) => e,
            Bound::Unbounded => self.0.len(),
        };
        Word(self.0[start..end].to_vec())
    }

    /// Concatenation in the free monoid; no normalization of any kind.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The group inverse: letters reversed, each sign flipped.
    pub fn invert(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// The same letters in reverse order (no sign change).
    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The unique reduced form: no adjacent letter/inverse pair remains.
    ///
    /// Single left-to-right scan with the output prefix acting as a stack.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[1] != p[0].inverse())
    }

    /// Reduced, and the last letter is not the inverse of the first; the
    /// empty word counts as cyclically reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_reduced() {
            return false;
        }
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => l != f.inverse(),
            _ => true,
        }
    }

    /// Reduces, then peels matched outer pairs off both ends at once.
    ///
    /// The result satisfies `reduce(self) = conjugator ∘ core ∘ conjugator⁻¹`
    /// as a letter-for-letter factorization, with `core` cyclically reduced;
    /// the pair is unique.
    pub fn cyc_reduce(&self) -> CyclicReductionWitness {
        let reduced = self.reduce();
        let letters = reduced.letters();
        let mut i = 0;
        let mut j = letters.len();
        while j - i >= 2 && letters[i] == letters[j - 1].inverse() {
            i += 1;
            j -= 1;
        }
        CyclicReductionWitness {
            conjugator: reduced.slice(..i),
            core: reduced.slice(i..j),
        }
    }

    /// `ρ̂(self)`: the cyclically reduced core alone.
    pub fn cyc_core(&self) -> Word {
        self.cyc_reduce().core
    }

    /// The reduced product `self · other = ρ(self other)`.
    pub fn reduced_product(&self, other: &Word) -> Word {
        self.concat(other).reduce()
    }

    /// The cyclically reduced product `self * other = ρ̂(self other)`,
    /// together with a conjugator `α` such that
    /// `ρ(α self other α⁻¹) = result`.
    pub fn cyc_reduced_product(&self, other: &Word) -> (Word, Word) {
        let witness = self.concat(other).cyc_reduce();
        let conjugator = witness.conjugator.invert();
        (witness.core, conjugator)
    }

    /// The cyclically reduced product, result only.
    pub fn star(&self, other: &Word) -> Word {
        self.concat(other).cyc_core()
    }

    /// The rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut letters = Vec::with_capacity(self.0.len());
        letters.extend_from_slice(&self.0[k..]);
        letters.extend_from_slice(&self.0[..k]);
        Word(letters)
    }

    /// All `len` rotations in offset order, duplicates preserved; the empty
    /// word has the single rotation `[1]`.
    pub fn rotations(&self) -> Vec<Word> {
        if self.0.is_empty() {
            return vec![Word::empty()];
        }
        (0..self.0.len()).map(|k| self.rotate_left(k)).collect()
    }

    /// The lexicographically least rotation under the letter order
    /// `a < A < b < B < …`; equal for two words exactly when they are
    /// rotations of one another.
    pub fn canonical_rotation(&self) -> Word {
        self.rotations().into_iter().min().unwrap_or_default()
    }

    /// True when `other` is a rotation of `self`: equal lengths and `self`
    /// occurs inside `other ∘ other`.
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let doubled = other.concat(other);
        (0..other.len()).any(|k| &doubled.letters()[k..k + self.len()] == self.letters())
    }

    /// When `self ~ other`, the shortest word `p` with
    /// `self ∘ p = p ∘ other` letter-for-letter; `None` otherwise.
    pub fn cyclic_perm_witness(&self, other: &Word) -> Option<Word> {
        if self == other {
            return Some(Word::empty());
        }
        if self.len() != other.len() || self.is_empty() {
            return None;
        }
        // self = other[k..] ∘ other[..k] gives p = other[k..]; the largest
        // such k yields the shortest witness
        let doubled = other.concat(other);
        (1..other.len())
            .rev()
            .find(|&k| &doubled.letters()[k..k + self.len()] == self.letters())
            .map(|k| other.slice(k..))
    }

    /// The primitive root: the unique non-power `root` with
    /// `self = ρ(rootᵐ)`. The input must be reduced; the empty word reports
    /// `(1, 0)`.
    pub fn primitive_root(&self) -> Result<PrimitiveRoot, NotReducedError> {
        if !self.is_reduced() {
            return Err(NotReducedError);
        }
        if self.is_empty() {
            return Ok(PrimitiveRoot {
                root: Word::empty(),
                exponent: 0,
            });
        }
        let witness = self.cyc_reduce();
        let core = &witness.core;
        let period = least_period(core.letters());
        let exponent = core.len() / period;
        let block = core.slice(..period);
        // conjugator ∘ block ∘ conjugator⁻¹ is reduced: block keeps the
        // core's first letter and its last letter equals the core's last.
        let root = witness
            .conjugator
            .concat(&block)
            .concat(&witness.conjugator.invert());
        Ok(PrimitiveRoot { root, exponent })
    }
}

/// Least `d` dividing `len` such that the slice is `d`-periodic.
fn least_period(letters: &[Letter]) -> usize {
    let n = letters.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| letters[i] == letters[i - d]))
        .unwrap_or(n)
}

/// The unique factorization `ρ(w) = conjugator ∘ core ∘ conjugator⁻¹` with a
/// cyclically reduced core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicReductionWitness {
    pub conjugator: Word,
    pub core: Word,
}

/// A reduced word `root` that is not a proper power, with `w = ρ(rootᵉ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

/// Raises a reduced word to a non-negative power, reducing.
pub fn reduced_power(w: &Word, e: usize) -> Word {
    let mut acc = Word::empty();
    for _ in 0..e {
        acc = acc.concat(w);
    }
    acc.reduce()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input; the empty word is written \"1\"")]
    Empty,
    #[error("invalid character {ch:?} at offset {offset}")]
    InvalidCharacter { ch: char, offset: usize },
    #[error("\"1\" at offset {offset} cannot stand next to letters")]
    MisplacedOne { offset: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("generator {gen} does not fit the 26-letter notation")]
pub struct NotationError {
    pub gen: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("word is not reduced")]
pub struct NotReducedError;

/// Parses the text notation: lowercase letter = generator, uppercase = its
/// inverse, the sole string `"1"` = the empty word. Offsets in errors are
/// 1-based.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    if text.is_empty() {
        return Err(ParseError::Empty);
    }
    if text == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::with_capacity(text.len());
    for (i, ch) in text.chars().enumerate() {
        let letter = match ch {
            'a'..='z' => Letter::new(ch as u32 - 'a' as u32 + 1, Sign::Plus),
            'A'..='Z' => Letter::new(ch as u32 - 'A' as u32 + 1, Sign::Minus),
            '1' => return Err(ParseError::MisplacedOne { offset: i + 1 }),
            _ => return Err(ParseError::InvalidCharacter { ch, offset: i + 1 }),
        };
        letters.push(letter);
    }
    Ok(Word(letters))
}

/// Formats a word in the text notation; inverse of [`parse_word`]. Words
/// using generators past 26 have no notation and are rejected.
pub fn format_word(w: &Word) -> Result<String, NotationError> {
    if w.is_empty() {
        return Ok("1".to_string());
    }
    w.letters()
        .iter()
        .map(|l| l.to_ascii().ok_or(NotationError { gen: l.generator() }))
        .collect()
}
