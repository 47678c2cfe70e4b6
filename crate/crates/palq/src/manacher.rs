//! All maximal palindromes of the text, flattened into the MP array that the
//! infix step queries through the range-maximum index.

use crate::error::{Error, Result};
use crate::text::{Span, Text};

/// Maximal-palindrome lengths by doubled center.
///
/// `lengths` has 2n-1 entries; the entry at 1-based index m is the length of
/// the maximal palindrome centered at c = (m+1)/2. Odd m are integer centers
/// (length >= 1 and odd), even m are half-integer centers (length >= 0 and
/// even). Entries of length 0 are stored explicitly so that the index
/// arithmetic of the infix step stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpArray {
    lengths: Vec<u32>,
}

impl MpArray {
    /// Number of entries, 2n-1.
    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.lengths
    }

    /// Length entry at 1-based index m.
    pub fn get(&self, m: usize) -> Result<u32> {
        if m == 0 || m > self.lengths.len() {
            return Err(Error::OutOfRange { index: m, len: self.lengths.len() });
        }
        Ok(self.lengths[m - 1])
    }

    /// Text span of the maximal palindrome recorded at 1-based index m, or
    /// `None` for a length-0 entry. With c = (m+1)/2 and L the stored length,
    /// the span is (c - (L-1)/2, c + (L-1)/2), kept in integer arithmetic as
    /// ((m+2-L)/2, (m+L)/2).
    pub fn span_at(&self, m: usize) -> Result<Option<Span>> {
        let len = self.get(m)? as usize;
        if len == 0 {
            return Ok(None);
        }
        Ok(Some(Span { start: (m + 2 - len) / 2, end: (m + len) / 2 }))
    }
}

/// Computes the MP array in O(n) time.
///
/// Works in doubled coordinates: position `d` of the scratch array holds the
/// longest palindrome whose 0-based endpoints l, r satisfy l + r = d. The
/// sentinel positions 0 and 2n never hold anything and are dropped from the
/// result.
pub fn compute_mp(text: &Text) -> MpArray {
    let s = text.bytes();
    let n = s.len();
    let mut a = vec![0u32; 2 * n + 1];
    let mut d = 1; // doubled center currently being resolved
    let mut l = 0; // known palindrome length at d
    while d <= 2 * n {
        // a palindrome at doubled center d has length of the same parity
        l += (d + l) % 2;
        while l < d && d + l < 2 * n && s[(d - l) / 2 - 1] == s[(d + l) / 2] {
            l += 2;
        }
        a[d] = l as u32;
        if l == 0 {
            d += 1;
            continue;
        }
        // mirror the prefix of the current palindrome onto centers right of d
        let mut k = 1;
        while k <= d && k + (a[d - k] as usize) < l {
            a[d + k] = a[d - k];
            k += 1;
        }
        d += k;
        l -= k;
    }
    MpArray { lengths: a[1..2 * n].to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn t(s: &[u8]) -> Text {
        Text::new(s.to_vec()).unwrap()
    }

    #[test]
    fn known_arrays() {
        assert_eq!(compute_mp(&t(b"aba")).as_slice(), [1, 0, 3, 0, 1]);
        assert_eq!(compute_mp(&t(b"aa")).as_slice(), [1, 2, 1]);
        assert_eq!(compute_mp(&t(b"x")).as_slice(), [1]);
    }

    #[test]
    fn spans() {
        let mp = compute_mp(&t(b"aba"));
        assert_eq!(mp.span_at(3).unwrap(), Some(Span { start: 1, end: 3 }));
        assert_eq!(mp.span_at(2).unwrap(), None);
        assert!(mp.span_at(0).is_err());
        assert!(mp.span_at(6).is_err());
        let mp = compute_mp(&t(b"aa"));
        assert_eq!(mp.span_at(2).unwrap(), Some(Span { start: 1, end: 2 }));
    }

    fn assert_invariants(text: &Text, mp: &MpArray) {
        let n = text.len();
        assert_eq!(mp.len(), 2 * n - 1);
        for m in 1..=mp.len() {
            let len = mp.get(m).unwrap() as usize;
            // parity and the one-character floor at integer centers
            if m % 2 == 1 {
                assert!(len >= 1 && len % 2 == 1, "m={m} len={len}");
            } else {
                assert!(len % 2 == 0, "m={m} len={len}");
            }
            // maximality: the recorded palindrome extends to a text border
            // or is blocked by a mismatch
            if let Some(span) = mp.span_at(m).unwrap() {
                assert_eq!(span.len(), len);
                assert!(text.slice(span.start, span.end).iter().eq(text
                    .slice(span.start, span.end)
                    .iter()
                    .rev()));
                if span.start > 1 && span.end < n {
                    assert_ne!(text.at(span.start - 1), text.at(span.end + 1));
                }
            }
        }
    }

    #[test]
    fn exhaustive_binary_up_to_12() {
        for len in 1..=12usize {
            for bits in 0..1u32 << len {
                let s: Vec<u8> = (0..len).map(|k| b'a' + ((bits >> k) & 1) as u8).collect();
                let text = t(&s);
                let mp = compute_mp(&text);
                assert_eq!(mp.as_slice(), oracle::mp_lengths(&text), "text {:?}", s);
                assert_invariants(&text, &mp);
            }
        }
    }

    #[test]
    fn random_strings_match_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x9a7c);
        for case in 0..1000 {
            let n = rng.gen_range(1..=2000);
            let sigma = *[2usize, 4, 26].iter().nth(case % 3).map(|x| x).unwrap();
            let s: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect();
            let text = t(&s);
            let mp = compute_mp(&text);
            assert_eq!(mp.as_slice(), oracle::mp_lengths(&text));
        }
    }

    #[test]
    fn longest_entry_is_longest_palindromic_substring() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x51ec);
        for _ in 0..200 {
            let n = rng.gen_range(1..=300);
            let s: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..3) as u8).collect();
            let text = t(&s);
            let best = *compute_mp(&text).as_slice().iter().max().unwrap() as usize;
            assert_eq!(best, oracle::longest_pal(&text, 1, n));
        }
    }

    proptest! {
        #[test]
        fn matches_oracle(s in proptest::collection::vec(0u8..4, 1..200)) {
            let text = Text::new(s).unwrap();
            let mp = compute_mp(&text);
            prop_assert_eq!(mp.as_slice(), oracle::mp_lengths(&text).as_slice());
            assert_invariants(&text, &mp);
        }
    }
}
