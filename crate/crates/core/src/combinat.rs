//! Compositions of integers and multisets of letters.

/// All compositions of `n` (ordered tuples of positive integers summing to
/// `n`), enumerated as bitmasks over the `n-1` gap positions in increasing
/// binary order. `compositions(0)` is the single empty composition.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    assert!(n <= 24, "composition enumeration limited to n <= 24");
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for gap in 0..n - 1 {
            if mask & (1 << gap) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(parts);
    }
    out
}

/// All multisets of size `k` over the letters `1..=d`, as sorted-ascending
/// lists in lexicographic order.
pub fn letter_multisets(d: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(d: u32, k: usize, lo: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for l in lo..=d {
            current.push(l);
            rec(d, k, l, current, out);
            current.pop();
        }
    }
    if k > 0 {
        rec(d, k, 1, &mut current, &mut out);
    }
    out
}
