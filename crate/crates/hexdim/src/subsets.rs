//! Lexicographic k-subset enumeration over `{0..n-1}` with rank support.
//!
//! Ranks let the search partition one subset size into contiguous
//! lexicographic ranges for independent workers; the combined scan order is
//! identical to the single-threaded one.

/// Binomial coefficient, saturating at `u128::MAX` on overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        match result.checked_mul((n - i) as u128) {
            Some(r) => result = r / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    result
}

/// The `rank`-th (0-based) k-subset of `{0..n-1}` in lexicographic order.
pub fn combination_at_rank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    debug_assert!(rank < binomial(n, k).max(1));
    let mut comb = Vec::with_capacity(k);
    let mut v = 0;
    for pos in 0..k {
        loop {
            let with_v = binomial(n - 1 - v, k - pos - 1);
            if rank < with_v {
                comb.push(v);
                v += 1;
                break;
            }
            rank -= with_v;
            v += 1;
        }
    }
    comb
}

/// Advances `comb` to its lexicographic successor; returns `false` when the
/// last combination has been passed.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for pos in i + 1..k {
                comb[pos] = comb[pos - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(72, 2), 2556);
        assert_eq!(binomial(10, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(300, 150), u128::MAX);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        for n in 1..=7 {
            for k in 1..=n {
                let mut comb: Vec<usize> = (0..k).collect();
                let mut all = vec![comb.clone()];
                while next_combination(&mut comb, n) {
                    all.push(comb.clone());
                }
                assert_eq!(all.len() as u128, binomial(n, k));
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn unranking_matches_enumeration() {
        let (n, k) = (8, 3);
        let mut comb: Vec<usize> = (0..k).collect();
        let mut rank = 0u128;
        loop {
            assert_eq!(combination_at_rank(n, k, rank), comb, "rank {rank}");
            rank += 1;
            if !next_combination(&mut comb, n) {
                break;
            }
        }
        assert_eq!(rank, binomial(n, k));
    }
}
