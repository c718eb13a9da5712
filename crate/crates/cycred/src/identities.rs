//! Identities among relations: sequences of conjugated relators, their
//! evaluation, Peiffer moves, and basic/strictly-basic certification.
//!
//! An [`IdentitySequence`] `[(a₁, r₁), …, (aₙ, rₙ)]` stands for the product
//! of conjugates `a₁r₁a₁⁻¹ ⋯ aₙrₙaₙ⁻¹`; its evaluation is the reduced form
//! of that product. A sequence evaluating to the empty word is an identity
//! among the relators it mentions. The identity is *basic* when the
//! sequence, read as a word over (coefficient, relator) letters with
//! `(a, r)⁻¹ = (a, r⁻¹)`, freely reduces to the empty sequence, and
//! *strictly basic* when moreover all coefficients agree.
//!
//! Text format, one identity per line: terms `(coef;relator)` joined by
//! `*`, the two sides separated by `==`, words in the usual notation. A
//! normal form has an empty right side, e.g. `(x;y)*(x;Y)==`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::word::{format_word, parse_word, NotationError, ParseError, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("sequence does not evaluate to 1 (got a non-trivial word)")]
    NotAnIdentity,
    #[error("the two sides evaluate to different words")]
    SidesDiffer,
    #[error("no term pair at index {index}")]
    IndexOutOfRange { index: usize },
    #[error("terms at index {index} are not a Peiffer pair")]
    DeletionNotApplicable { index: usize },
}

/// A relator together with its conjugating coefficient; both are kept
/// reduced at all times, so equality of coefficients is syntactic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjugatedRelator {
    coefficient: Word,
    relator: Word,
}

impl ConjugatedRelator {
    pub fn new(coefficient: &Word, relator: &Word) -> ConjugatedRelator {
        ConjugatedRelator {
            coefficient: coefficient.reduce(),
            relator: relator.reduce(),
        }
    }

    pub fn coefficient(&self) -> &Word {
        &self.coefficient
    }

    pub fn relator(&self) -> &Word {
        &self.relator
    }

    /// The inverse of `(a, r)` is `(a, r⁻¹)`.
    pub fn inverse(&self) -> ConjugatedRelator {
        ConjugatedRelator {
            coefficient: self.coefficient.clone(),
            relator: self.relator.invert(),
        }
    }

    /// The conjugate `a r a⁻¹` as a reduced word.
    pub fn evaluate(&self) -> Word {
        self.coefficient
            .concat(&self.relator)
            .concat(&self.coefficient.invert())
            .reduce()
    }
}

/// A finite sequence of conjugated relators; the carrier of identities
/// among relations. The empty sequence is the trivial element.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IdentitySequence(Vec<ConjugatedRelator>);

impl IdentitySequence {
    pub fn new(terms: Vec<ConjugatedRelator>) -> IdentitySequence {
        IdentitySequence(terms)
    }

    pub fn terms(&self) -> &[ConjugatedRelator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The reduced word of the concatenated conjugates.
    pub fn evaluate(&self) -> Word {
        self.0
            .iter()
            .fold(Word::empty(), |acc, t| {
                acc.concat(&t.evaluate())
            })
            .reduce()
    }

    fn pair(&self, index: usize) -> Result<(&ConjugatedRelator, &ConjugatedRelator), IdentityError> {
        if index + 1 >= self.0.len() {
            return Err(IdentityError::IndexOutOfRange { index });
        }
        Ok((&self.0[index], &self.0[index + 1]))
    }

    /// Removes the adjacent pair at `index`, `index + 1` when the
    /// coefficients agree and the relators are mutually inverse. Leaves the
    /// evaluation unchanged.
    pub fn peiffer_delete(&self, index: usize) -> Result<IdentitySequence, IdentityError> {
        let (first, second) = self.pair(index)?;
        if first.coefficient != second.coefficient || first.relator.invert() != second.relator {
            return Err(IdentityError::DeletionNotApplicable { index });
        }
        let mut terms = self.0.clone();
        terms.drain(index..index + 2);
        Ok(IdentitySequence(terms))
    }

    /// Swaps the adjacent pair at `index` with the compensating
    /// conjugation; the evaluation is unchanged.
    ///
    /// Kind `A` turns `(a,r),(b,s)` into `(b,s),(ρ(bs⁻¹b⁻¹a),r)`; kind `B`
    /// turns it into `(ρ(ara⁻¹b),s),(a,r)`.
    pub fn exchange(&self, index: usize, kind: ExchangeKind) -> Result<IdentitySequence, IdentityError> {
        let (first, second) = self.pair(index)?;
        let (a, r) = (&first.coefficient, &first.relator);
        let (b, s) = (&second.coefficient, &second.relator);
        let mut terms = self.0.clone();
        match kind {
            ExchangeKind::A => {
                let moved = b
                    .concat(&s.invert())
                    .concat(&b.invert())
                    .concat(a)
                    .reduce();
                terms[index] = second.clone();
                terms[index + 1] = ConjugatedRelator::new(&moved, r);
            }
            ExchangeKind::B => {
                let moved = a.concat(r).concat(&a.invert()).concat(b).reduce();
                terms[index] = ConjugatedRelator::new(&moved, s);
                terms[index + 1] = first.clone();
            }
        }
        Ok(IdentitySequence(terms))
    }

    /// Rewrites term `index` over the conjugated relator `ρ(c rᵢ c⁻¹)`,
    /// compensating in the coefficient: `(aᵢ, rᵢ) ↦ (ρ(aᵢc⁻¹), ρ(crᵢc⁻¹))`.
    pub fn conjugate_term(&self, index: usize, c: &Word) -> Result<IdentitySequence, IdentityError> {
        if index >= self.0.len() {
            return Err(IdentityError::IndexOutOfRange { index });
        }
        let term = &self.0[index];
        let coefficient = term.coefficient.concat(&c.invert()).reduce();
        let relator = c.concat(&term.relator).concat(&c.invert()).reduce();
        let mut terms = self.0.clone();
        terms[index] = ConjugatedRelator {
            coefficient,
            relator,
        };
        Ok(IdentitySequence(terms))
    }

    /// Free reduction over (coefficient, relator) letters. Errors unless
    /// the sequence evaluates to 1.
    pub fn is_basic(&self) -> Result<bool, IdentityError> {
        if !self.evaluate().is_empty() {
            return Err(IdentityError::NotAnIdentity);
        }
        Ok(self.freely_reduced().is_empty())
    }

    /// Basic with all coefficients equal. Errors unless the sequence
    /// evaluates to 1.
    pub fn is_strictly_basic(&self) -> Result<bool, IdentityError> {
        let basic = self.is_basic()?;
        let uniform = self
            .0
            .windows(2)
            .all(|p| p[0].coefficient == p[1].coefficient);
        Ok(basic && uniform)
    }

    fn freely_reduced(&self) -> Vec<ConjugatedRelator> {
        let mut stack: Vec<ConjugatedRelator> = Vec::new();
        for term in &self.0 {
            if stack.last() == Some(&term.inverse()) {
                stack.pop();
            } else {
                stack.push(term.clone());
            }
        }
        stack
    }

    pub fn apply(&self, mv: &PeifferMove) -> Result<IdentitySequence, IdentityError> {
        match *mv {
            PeifferMove::Delete { index } => self.peiffer_delete(index),
            PeifferMove::Exchange { index, kind } => self.exchange(index, kind),
        }
    }

    /// Breadth-first search for a move trace that empties the sequence.
    ///
    /// Deletions are tried before exchanges, so when a deletions-only
    /// collapse exists the returned trace is deletions-only. Absence within
    /// `max_moves` is inconclusive. Errors unless the sequence evaluates
    /// to 1.
    pub fn collapse_search(&self, max_moves: usize) -> Result<Option<Vec<PeifferMove>>, IdentityError> {
        if !self.evaluate().is_empty() {
            return Err(IdentityError::NotAnIdentity);
        }
        if self.is_empty() {
            return Ok(Some(Vec::new()));
        }
        let mut seen: HashSet<Vec<ConjugatedRelator>> = HashSet::new();
        let mut queue: VecDeque<(IdentitySequence, Vec<PeifferMove>)> = VecDeque::new();
        seen.insert(self.0.clone());
        queue.push_back((self.clone(), Vec::new()));
        while let Some((state, trace)) = queue.pop_front() {
            if trace.len() >= max_moves {
                continue;
            }
            let mut moves = Vec::new();
            for index in 0..state.len().saturating_sub(1) {
                moves.push(PeifferMove::Delete { index });
            }
            for index in 0..state.len().saturating_sub(1) {
                moves.push(PeifferMove::Exchange { index, kind: ExchangeKind::A });
                moves.push(PeifferMove::Exchange { index, kind: ExchangeKind::B });
            }
            for mv in moves {
                let next = match state.apply(&mv) {
                    Ok(next) => next,
                    Err(_) => continue,
                };
                if !seen.insert(next.0.clone()) {
                    continue;
                }
                let mut next_trace = trace.clone();
                next_trace.push(mv);
                if next.is_empty() {
                    return Ok(Some(next_trace));
                }
                queue.push_back((next, next_trace));
            }
        }
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExchangeKind {
    A,
    B,
}

/// One rewriting step on an identity sequence; `index` addresses the first
/// term of the affected adjacent pair, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeifferMove {
    Delete { index: usize },
    Exchange { index: usize, kind: ExchangeKind },
}

impl fmt::Display for PeifferMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeifferMove::Delete { index } => write!(f, "delete@{index}"),
            PeifferMove::Exchange { index, kind: ExchangeKind::A } => write!(f, "exchangeA@{index}"),
            PeifferMove::Exchange { index, kind: ExchangeKind::B } => write!(f, "exchangeB@{index}"),
        }
    }
}

/// A two-sided identity `lhs ≡ rhs`: both sides evaluate to the same word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedIdentity {
    pub lhs: IdentitySequence,
    pub rhs: IdentitySequence,
}

impl TwoSidedIdentity {
    /// The two canonical normal forms: `lhs` followed by the reversed and
    /// inverted `rhs`, and the rotation carrying the inverted `rhs` in
    /// front. Both evaluate to 1 and are rotations of one another as
    /// sequences.
    pub fn normal_forms(&self) -> Result<(IdentitySequence, IdentitySequence), IdentityError> {
        if self.lhs.evaluate() != self.rhs.evaluate() {
            return Err(IdentityError::SidesDiffer);
        }
        let inverted_rhs: Vec<ConjugatedRelator> =
            self.rhs.terms().iter().rev().map(ConjugatedRelator::inverse).collect();
        let mut first = self.lhs.terms().to_vec();
        first.extend(inverted_rhs.iter().cloned());
        let mut second = inverted_rhs;
        second.extend(self.lhs.terms().iter().cloned());
        Ok((IdentitySequence(first), IdentitySequence(second)))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("missing `==` between the two sides")]
    MissingSeparator,
    #[error("term {index}: expected `(coef;relator)`")]
    MalformedTerm { index: usize },
    #[error("term {index}: {source}")]
    BadWord {
        index: usize,
        #[source]
        source: ParseError,
    },
}

/// Parses a term chain `(coef;relator)*…`; the empty string is the empty
/// sequence.
pub fn parse_terms(text: &str) -> Result<IdentitySequence, FormatError> {
    let mut terms = Vec::new();
    if text.is_empty() {
        return Ok(IdentitySequence(terms));
    }
    for (index, chunk) in text.split('*').enumerate() {
        let index = index + 1;
        let inner = chunk
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or(FormatError::MalformedTerm { index })?;
        let (coef_text, relator_text) = inner
            .split_once(';')
            .ok_or(FormatError::MalformedTerm { index })?;
        let coefficient =
            parse_word(coef_text).map_err(|source| FormatError::BadWord { index, source })?;
        let relator =
            parse_word(relator_text).map_err(|source| FormatError::BadWord { index, source })?;
        terms.push(ConjugatedRelator::new(&coefficient, &relator));
    }
    Ok(IdentitySequence(terms))
}

/// Parses one identity line, e.g. `(x;y)*(x;Y)==`.
pub fn parse_identity(line: &str) -> Result<TwoSidedIdentity, FormatError> {
    let (lhs, rhs) = line.split_once("==").ok_or(FormatError::MissingSeparator)?;
    Ok(TwoSidedIdentity {
        lhs: parse_terms(lhs)?,
        rhs: parse_terms(rhs)?,
    })
}

/// Formats a term chain as `(coef;relator)*…`; the empty sequence prints
/// as the empty string.
pub fn format_terms(seq: &IdentitySequence) -> Result<String, NotationError> {
    let parts: Result<Vec<String>, NotationError> = seq
        .terms()
        .iter()
        .map(|t| {
            Ok(format!(
                "({};{})",
                format_word(t.coefficient())?,
                format_word(t.relator())?
            ))
        })
        .collect();
    Ok(parts?.join("*"))
}

/// Formats a two-sided identity as a file line.
pub fn format_identity(id: &TwoSidedIdentity) -> Result<String, NotationError> {
    Ok(format!("{}=={}", format_terms(&id.lhs)?, format_terms(&id.rhs)?))
}
