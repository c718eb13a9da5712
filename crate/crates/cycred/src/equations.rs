//! Structural word equations: Levi splits, bar alignments of two
//! factorizations, maximal cancellation, and the three-way decomposition of
//! a reduced product against its cyclically reduced core.
//!
//! Everything here is about *literal* (free-monoid) factorizations: the
//! returned witness words re-concatenate to the inputs letter for letter.

use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquationError {
    #[error("the two concatenations differ")]
    UnequalConcatenations,
    #[error("input word is not reduced")]
    NotReduced,
    #[error("u is the inverse of v")]
    InverseInputs,
}

/// Which side of `u1 u2 = v1 v2` carries the overlap word `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeviSide {
    /// `u1 = v1 ∘ p` and `v2 = p ∘ u2`.
    FirstLonger,
    /// `v1 = u1 ∘ p` and `u2 = p ∘ v2`.
    SecondLonger,
    /// `u1 = v1`, `u2 = v2`, `p = 1`.
    Equal,
}

/// Solution of the two-factor word equation `u1 u2 = v1 v2` (Levi's lemma).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSolution {
    pub side: LeviSide,
    pub p: Word,
}

/// Resolves `u1 u2 = v1 v2` into the unique overlap word.
pub fn levi_split(
    u1: &Word,
    u2: &Word,
    v1: &Word,
    v2: &Word,
) -> Result<LeviSolution, EquationError> {
    if u1.concat(u2) != v1.concat(v2) {
        return Err(EquationError::UnequalConcatenations);
    }
    let solution = match u1.len().cmp(&v1.len()) {
        std::cmp::Ordering::Greater => LeviSolution {
            side: LeviSide::FirstLonger,
            p: u1.slice(v1.len()..),
        },
        std::cmp::Ordering::Less => LeviSolution {
            side: LeviSide::SecondLonger,
            p: v1.slice(u1.len()..),
        },
        std::cmp::Ordering::Equal => LeviSolution {
            side: LeviSide::Equal,
            p: Word::empty(),
        },
    };
    Ok(solution)
}

/// How two factorizations of the same word sit against each other.
///
/// `bars_in_u[i]` counts the internal bars of the `v` factorization that
/// fall inside `u_parts[i]`, a weak composition of `n − 1` into `m` parts
/// (and symmetrically for `bars_in_v`). `fragments` are the sub-words cut
/// by the merged bar set; grouping them along either side's bars restores
/// that side's parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarPlacement {
    pub bars_in_u: Vec<usize>,
    pub bars_in_v: Vec<usize>,
    pub fragments: Vec<Word>,
}

/// Aligns two factorizations `u_parts` and `v_parts` of the same word.
///
/// A bar at position `q` is charged to the first non-empty part whose end
/// reaches `q`, so a bar on a shared boundary counts toward the part on
/// its left and empty parts never receive bars.
pub fn align_factorizations(
    u_parts: &[Word],
    v_parts: &[Word],
) -> Result<BarPlacement, EquationError> {
    let whole: Word = u_parts
        .iter()
        .fold(Word::empty(), |acc, p| acc.concat(p));
    let whole_v: Word = v_parts
        .iter()
        .fold(Word::empty(), |acc, p| acc.concat(p));
    if whole != whole_v {
        return Err(EquationError::UnequalConcatenations);
    }

    let cuts = |parts: &[Word]| -> Vec<usize> {
        // internal bar positions, one per boundary between adjacent parts
        let mut acc = 0;
        let mut out = Vec::new();
        for p in &parts[..parts.len().saturating_sub(1)] {
            acc += p.len();
            out.push(acc);
        }
        out
    };
    let ends = |parts: &[Word]| -> Vec<usize> {
        let mut acc = 0;
        parts
            .iter()
            .map(|p| {
                acc += p.len();
                acc
            })
            .collect()
    };
    let charge = |bars: &[usize], parts: &[Word]| -> Vec<usize> {
        let ends = ends(parts);
        let mut counts = vec![0usize; parts.len()];
        for &q in bars {
            let i = parts
                .iter()
                .zip(&ends)
                .position(|(p, &e)| !p.is_empty() && e >= q)
                .unwrap_or(0);
            counts[i] += 1;
        }
        counts
    };

    let u_cuts = cuts(u_parts);
    let v_cuts = cuts(v_parts);
    let mut merged: Vec<usize> = Vec::new();
    merged.push(0);
    merged.extend_from_slice(&u_cuts);
    merged.extend_from_slice(&v_cuts);
    merged.push(whole.len());
    merged.sort_unstable();
    merged.dedup();
    let fragments = merged
        .windows(2)
        .map(|p| whole.slice(p[0]..p[1]))
        .collect();

    Ok(BarPlacement {
        bars_in_u: charge(&v_cuts, u_parts),
        bars_in_v: charge(&u_cuts, v_parts),
        fragments,
    })
}

/// Splits the maximal cancellation out of a product of reduced words:
/// `u = u_left ∘ a`, `v = a⁻¹ ∘ v_right`, and `u_left ∘ v_right` is reduced
/// (so it equals `ρ(uv)`). Returns `(u_left, a, v_right)`.
pub fn max_cancellation(u: &Word, v: &Word) -> (Word, Word, Word) {
    let ul = u.letters();
    let vl = v.letters();
    let mut d = 0;
    while d < ul.len() && d < vl.len() && ul[ul.len() - 1 - d] == vl[d].inverse() {
        d += 1;
    }
    (u.slice(..u.len() - d), u.slice(u.len() - d..), v.slice(d..))
}

/// Where the cyclically reduced core of `ρ(uv)` sits relative to the
/// surviving parts of `u` and `v` after their mutual cancellation `a`.
///
/// Writing `core = u*v` and `ρ(uv) = u_left ∘ v_right`, exactly one shape
/// applies; every field is a literal factor of the corresponding input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductDecomposition {
    /// The core lies inside `v`'s surviving part:
    /// `u = u1 ∘ a`, `v = a⁻¹ ∘ s ∘ core ∘ s⁻¹ ∘ u1⁻¹`,
    /// `ρ(uv) = u1 ∘ s ∘ core ∘ s⁻¹ ∘ u1⁻¹`.
    CoreInSecond { u1: Word, a: Word, s: Word },
    /// The core straddles the boundary: `core = c1 ∘ c2` with non-empty
    /// halves, `u = t ∘ c1 ∘ a`, `v = a⁻¹ ∘ c2 ∘ t⁻¹`,
    /// `ρ(uv) = t ∘ c1 ∘ c2 ∘ t⁻¹`, `ρ(vu) = a⁻¹ ∘ c2 ∘ c1 ∘ a`, and
    /// `v*u = c2 ∘ c1`.
    CoreSplit { c1: Word, c2: Word, t: Word, a: Word },
    /// The core lies inside `u`'s surviving part:
    /// `u = v1⁻¹ ∘ s ∘ core ∘ s⁻¹ ∘ a`, `v = a⁻¹ ∘ v1`,
    /// `ρ(uv) = v1⁻¹ ∘ s ∘ core ∘ s⁻¹ ∘ v1`.
    CoreInFirst { v1: Word, s: Word, a: Word },
}

/// Decomposes a pair of reduced words `u ≠ v⁻¹` against the cyclically
/// reduced core of their product.
///
/// Shapes overlapping on boundary inputs are resolved in the order
/// `CoreSplit`, `CoreInSecond`, `CoreInFirst`; `u = 1` or `v = 1` fall into
/// the `CoreIn…` shapes with empty witness words.
pub fn decompose_product(u: &Word, v: &Word) -> Result<ProductDecomposition, EquationError> {
    if !u.is_reduced() || !v.is_reduced() {
        return Err(EquationError::NotReduced);
    }
    if *u == v.invert() {
        return Err(EquationError::InverseInputs);
    }
    let (u_left, a, v_right) = max_cancellation(u, v);
    let reduced = u_left.concat(&v_right);
    debug_assert!(reduced.is_reduced());
    let cw = reduced.cyc_reduce();
    let t_len = cw.conjugator.len();
    let core_len = cw.core.len();
    let p = u_left.len();

    if t_len < p && p < t_len + core_len {
        // boundary strictly inside the core
        Ok(ProductDecomposition::CoreSplit {
            c1: u_left.slice(t_len..),
            c2: v_right.slice(..t_len + core_len - p),
            t: cw.conjugator,
            a,
        })
    } else if p <= t_len {
        // conjugator swallows all of u's surviving part
        Ok(ProductDecomposition::CoreInSecond {
            u1: u_left,
            a,
            s: cw.conjugator.slice(p..),
        })
    } else {
        // p >= t_len + core_len: core entirely inside u's surviving part
        Ok(ProductDecomposition::CoreInFirst {
            s: cw.conjugator.slice(v_right.len()..),
            v1: v_right,
            a,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn levi_split_examples() {
        let sol = levi_split(&w("xy"), &w("y"), &w("x"), &w("yy")).unwrap();
        assert_eq!(sol, LeviSolution { side: LeviSide::FirstLonger, p: w("y") });
        let sol = levi_split(&w("x"), &w("y"), &w("x"), &w("y")).unwrap();
        assert_eq!(sol, LeviSolution { side: LeviSide::Equal, p: Word::empty() });
        let sol = levi_split(&w("x"), &w("yy"), &w("xy"), &w("y")).unwrap();
        assert_eq!(sol, LeviSolution { side: LeviSide::SecondLonger, p: w("y") });
        assert_eq!(
            levi_split(&w("x"), &w("y"), &w("y"), &w("x")),
            Err(EquationError::UnequalConcatenations)
        );
    }

    #[test]
    fn align_two_against_one() {
        let bp = align_factorizations(&[w("x"), w("y")], &[w("xy")]).unwrap();
        assert_eq!(bp.bars_in_u, vec![0, 0]);
        assert_eq!(bp.bars_in_v, vec![1]);
        assert_eq!(bp.fragments, vec![w("x"), w("y")]);
    }

    #[test]
    fn align_with_empty_part() {
        let bp =
            align_factorizations(&[Word::empty(), w("xy")], &[w("x"), w("y")]).unwrap();
        assert_eq!(bp.bars_in_u, vec![0, 1]);
        assert_eq!(bp.bars_in_v, vec![1, 0]);
    }

    #[test]
    fn align_four_against_three() {
        // v1 = u1·a, u2 = a·b, v2 = b·u3·c, u4 = c·v3
        let u_parts = [w("x"), w("yx"), Word::empty(), w("y")];
        let v_parts = [w("xy"), w("x"), w("y")];
        let bp = align_factorizations(&u_parts, &v_parts).unwrap();
        assert_eq!(bp.bars_in_u.iter().sum::<usize>(), 2);
        assert_eq!(bp.bars_in_v.iter().sum::<usize>(), 3);
        assert_eq!(bp.bars_in_u[2], 0, "empty part must take no bars");
        let whole: Word = bp
            .fragments
            .iter()
            .fold(Word::empty(), |acc, f| acc.concat(f));
        assert_eq!(whole, w("xyxy"));
        assert_eq!(
            align_factorizations(&[w("x")], &[w("y")]),
            Err(EquationError::UnequalConcatenations)
        );
    }

    #[test]
    fn max_cancellation_examples() {
        let (l, a, r) = max_cancellation(&w("xy"), &w("Yx"));
        assert_eq!((l, a, r), (w("x"), w("y"), w("x")));
        let (l, a, r) = max_cancellation(&w("xy"), &w("xy"));
        assert_eq!((l, a, r), (w("xy"), Word::empty(), w("xy")));
        let (l, a, r) = max_cancellation(&w("xy"), &w("YX"));
        assert_eq!((l, a, r), (Word::empty(), w("xy"), Word::empty()));
    }

    #[test]
    fn decompose_split_example() {
        match decompose_product(&w("xy"), &w("Yx")).unwrap() {
            ProductDecomposition::CoreSplit { c1, c2, t, a } => {
                assert_eq!((c1, c2, t, a), (w("x"), w("x"), Word::empty(), w("y")));
            }
            other => panic!("expected CoreSplit, got {other:?}"),
        }
        assert_eq!(w("Yx").star(&w("xy")), w("xx"));
    }

    #[test]
    fn decompose_core_in_second_example() {
        match decompose_product(&w("xy"), &w("YxyyXX")).unwrap() {
            ProductDecomposition::CoreInSecond { u1, a, s } => {
                assert_eq!((u1, a, s), (w("x"), w("y"), w("x")));
            }
            other => panic!("expected CoreInSecond, got {other:?}"),
        }
        assert_eq!(w("xy").star(&w("YxyyXX")), w("yy"));
    }

    #[test]
    fn decompose_core_in_first_example() {
        match decompose_product(&w("Yxxx"), &w("Xy")).unwrap() {
            ProductDecomposition::CoreInFirst { v1, s, a } => {
                assert_eq!((v1, s, a), (w("y"), Word::empty(), w("x")));
            }
            other => panic!("expected CoreInFirst, got {other:?}"),
        }
    }

    #[test]
    fn decompose_rejects_bad_inputs() {
        assert_eq!(
            decompose_product(&w("xX"), &w("y")),
            Err(EquationError::NotReduced)
        );
        assert_eq!(
            decompose_product(&w("xy"), &w("YX")),
            Err(EquationError::InverseInputs)
        );
    }

    /// Letter-exact reassembly of u, v and ρ(uv) from the returned witness.
    pub fn check_reassembly(u: &Word, v: &Word, d: &ProductDecomposition) {
        let core = u.star(v);
        let reduced = u.reduced_product(v);
        match d {
            ProductDecomposition::CoreInSecond { u1, a, s } => {
                assert_eq!(u1.concat(a), *u);
                assert_eq!(
                    a.invert()
                        .concat(s)
                        .concat(&core)
                        .concat(&s.invert())
                        .concat(&u1.invert()),
                    *v
                );
                assert_eq!(
                    u1.concat(s)
                        .concat(&core)
                        .concat(&s.invert())
                        .concat(&u1.invert()),
                    reduced
                );
            }
            ProductDecomposition::CoreSplit { c1, c2, t, a } => {
                assert!(!c1.is_empty() && !c2.is_empty());
                assert_eq!(c1.concat(c2), core);
                assert_eq!(t.concat(c1).concat(a), *u);
                assert_eq!(a.invert().concat(c2).concat(&t.invert()), *v);
                assert_eq!(
                    t.concat(c1).concat(c2).concat(&t.invert()),
                    reduced
                );
                assert_eq!(
                    a.invert().concat(c2).concat(c1).concat(a),
                    v.reduced_product(u)
                );
                assert_eq!(c2.concat(c1), v.star(u));
            }
            ProductDecomposition::CoreInFirst { v1, s, a } => {
                assert_eq!(
                    v1.invert()
                        .concat(s)
                        .concat(&core)
                        .concat(&s.invert())
                        .concat(a),
                    *u
                );
                assert_eq!(a.invert().concat(v1), *v);
                assert_eq!(
                    v1.invert()
                        .concat(s)
                        .concat(&core)
                        .concat(&s.invert())
                        .concat(v1),
                    reduced
                );
            }
        }
    }

    #[test]
    fn decompose_degenerate_inputs() {
        let d = decompose_product(&Word::empty(), &w("xyX")).unwrap();
        assert!(matches!(d, ProductDecomposition::CoreInSecond { .. }));
        check_reassembly(&Word::empty(), &w("xyX"), &d);
        let d = decompose_product(&w("xyX"), &Word::empty()).unwrap();
        assert!(matches!(d, ProductDecomposition::CoreInFirst { .. }));
        check_reassembly(&w("xyX"), &Word::empty(), &d);
    }

    fn arb_reduced(max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(0..4usize, 0..=max_len).prop_map(|ix| {
            use crate::word::{Letter, Sign};
            ix.into_iter()
                .map(|i| {
                    Letter::new(
                        (i / 2 + 1) as u32,
                        if i % 2 == 0 { Sign::Plus } else { Sign::Minus },
                    )
                })
                .collect::<Word>()
                .reduce()
        })
    }

    proptest! {
        #[test]
        fn max_cancellation_factorization(u in arb_reduced(12), v in arb_reduced(12)) {
            let (l, a, r) = max_cancellation(&u, &v);
            prop_assert_eq!(l.concat(&a), u.clone());
            prop_assert_eq!(a.invert().concat(&r), v.clone());
            prop_assert!(l.concat(&r).is_reduced());
            prop_assert_eq!(l.concat(&r), u.reduced_product(&v));
        }

        #[test]
        fn decompose_reassembles(u in arb_reduced(8), v in arb_reduced(8)) {
            if u != v.invert() {
                let d = decompose_product(&u, &v).unwrap();
                check_reassembly(&u, &v, &d);
            }
        }

        #[test]
        fn levi_reconstruction(s in arb_reduced(12), i in 0..13usize, j in 0..13usize) {
            let i = i.min(s.len());
            let j = j.min(s.len());
            let sol = levi_split(&s.slice(..i), &s.slice(i..), &s.slice(..j), &s.slice(j..)).unwrap();
            match sol.side {
                LeviSide::FirstLonger => {
                    prop_assert_eq!(s.slice(..j).concat(&sol.p), s.slice(..i));
                    prop_assert_eq!(sol.p.concat(&s.slice(i..)), s.slice(j..));
                }
                LeviSide::SecondLonger => {
                    prop_assert_eq!(s.slice(..i).concat(&sol.p), s.slice(..j));
                    prop_assert_eq!(sol.p.concat(&s.slice(j..)), s.slice(i..));
                }
                LeviSide::Equal => {
                    prop_assert!(sol.p.is_empty());
                    prop_assert_eq!(i, j);
                }
            }
        }
    }
}
