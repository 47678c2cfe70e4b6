//! Brute-force reference implementations used to differentially test every
//! index structure and end-to-end queries.
//!
//! Nothing here touches the index modules: the palindrome primitive is
//! duplicated on purpose so a shared bug cannot mask itself. Everything is
//! deliberately naive; complexity caps live in the callers.

use crate::text::Text;

/// Plain two-pointer palindrome check on a byte slice.
fn is_pal(s: &[u8]) -> bool {
    let mut l = 0;
    let mut r = s.len();
    while l + 1 < r {
        r -= 1;
        if s[l] != s[r] {
            return false;
        }
        l += 1;
    }
    true
}

/// Exact length of the longest palindromic substring of T[i..j], 1-based
/// inclusive, by center extension over all 2m-1 centers. O(m^2) worst case.
pub fn longest_pal(text: &Text, i: usize, j: usize) -> usize {
    let s = text.slice(i, j);
    let m = s.len();
    let mut best = 0;
    for center2 in 0..2 * m - 1 {
        // center2 = l + r for the candidate s[l..=r]
        let mut l = center2 / 2;
        let mut r = center2 - l;
        if s[l] != s[r] {
            continue;
        }
        while l > 0 && r + 1 < m && s[l - 1] == s[r + 1] {
            l -= 1;
            r += 1;
        }
        best = best.max(r - l + 1);
    }
    best
}

/// Maximal-palindrome lengths by half-integer center: entry at 1-based index
/// m is the length of the maximal palindrome centered at (m+1)/2. Naive
/// center extension; mirrors the MP array definition, not its algorithm.
pub fn mp_lengths(text: &Text) -> Vec<u32> {
    let s = text.bytes();
    let n = s.len();
    let mut out = Vec::with_capacity(2 * n - 1);
    for center2 in 0..2 * n - 1 {
        let mut l = center2 / 2;
        let mut r = center2 - l;
        let mut len = 0;
        if s[l] == s[r] {
            len = r - l + 1;
            while l > 0 && r + 1 < n && s[l - 1] == s[r + 1] {
                l -= 1;
                r += 1;
                len += 2;
            }
        }
        out.push(len as u32);
    }
    out
}

/// Lengths of all palindromic suffixes of T[1..j], ascending. The empty
/// suffix is not reported.
pub fn pal_suffix_lengths(text: &Text, j: usize) -> Vec<usize> {
    let prefix = text.slice(1, j);
    (1..=j).filter(|&l| is_pal(&prefix[j - l..])).collect()
}

/// Longest-palindrome length for every range (i, j) at once:
/// `table[i-1][j-i]` is the answer for T[i..j]. O(n^2) time and space,
/// meant for exhaustive all-pair sweeps where per-query extension would
/// be quartic.
pub fn all_range_answers(text: &Text) -> RangeTable {
    let s = text.bytes();
    let n = s.len();
    // pal[i][j]: is s[i..=j] a palindrome (0-based)
    let mut pal = vec![vec![false; n]; n];
    for i in 0..n {
        pal[i][i] = true;
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len - 1;
            pal[i][j] = s[i] == s[j] && (len == 2 || pal[i + 1][j - 1]);
        }
    }
    let mut best = vec![vec![0u32; n]; n];
    for i in (0..n).rev() {
        for j in i..n {
            let mut b = if pal[i][j] { (j - i + 1) as u32 } else { 1 };
            if i + 1 <= j {
                b = b.max(best[i + 1][j]).max(best[i][j - 1]);
            }
            best[i][j] = b;
        }
    }
    RangeTable { best }
}

/// Answers from [`all_range_answers`], addressed with 1-based positions.
pub struct RangeTable {
    best: Vec<Vec<u32>>,
}

impl RangeTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.best[i - 1][j - 1] as usize
    }
}
