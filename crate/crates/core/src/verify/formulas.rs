//! Closed-form values the suites compare against.

/// `C(n, k)`, zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `d * C(n + d - 2, d - 1)`, which is zero for `n <= 0`.
pub fn length_formula(d: usize, n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    d as i64 * binomial(n + d as i64 - 2, d as i64 - 1) as i64
}

/// `sum over subsets S of {1, ..., k-1} of (-1)^|S| * d * C(n - sum S + d - 2, d - 1)`.
///
/// This is the expected length of `T' / (I_n + (x2^2, ..., x_k^k))`.
pub fn alternating_formula(d: usize, n: i64, k: usize) -> i64 {
    subset_sums(k).into_iter().map(|(size, sum)| sign(size) * length_formula(d, n - sum)).sum()
}

/// The same alternating sum with `lengths(m)` in place of the closed form.
pub fn alternating_sum(n: i64, k: usize, mut lengths: impl FnMut(i64) -> i64) -> i64 {
    subset_sums(k).into_iter().map(|(size, sum)| sign(size) * lengths(n - sum)).sum()
}

fn sign(size: usize) -> i64 {
    if size.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

// (|S|, sum S) over subsets S of {1, ..., k-1}
fn subset_sums(k: usize) -> Vec<(usize, i64)> {
    let elems = k.saturating_sub(1);
    (0u32..1 << elems)
        .map(|mask| {
            let sum = (0..elems).filter(|b| mask & (1 << b) != 0).map(|b| b as i64 + 1).sum();
            (mask.count_ones() as usize, sum)
        })
        .collect()
}
