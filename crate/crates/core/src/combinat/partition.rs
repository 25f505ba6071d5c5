use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// A partition of `k` as multiplicities `(λ_1, …, λ_k)` with `Σ j λ_j = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    multiplicities: Vec<u32>,
}

impl Partition {
    /// Builds a partition from multiplicities; `None` if the vector is empty.
    pub fn new(multiplicities: Vec<u32>) -> Option<Self> {
        (!multiplicities.is_empty()).then_some(Partition { multiplicities })
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Multiplicity of the part `j` (1-based); zero beyond the vector.
    pub fn multiplicity(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    /// The partitioned integer `Σ j λ_j`.
    pub fn total(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, &l)| (i + 1) * l as usize)
            .sum()
    }

    /// Number of parts `Σ λ_j`.
    pub fn parts(&self) -> usize {
        self.multiplicities.iter().map(|&l| l as usize).sum()
    }
}

fn generate(k: usize) -> Vec<Partition> {
    fn go(j: usize, k: usize, rest: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if j > k {
            if rest == 0 {
                out.push(Partition { multiplicities: current.clone() });
            }
            return;
        }
        for l in 0..=rest / j {
            let left = rest - l * j;
            // Whatever is left must be coverable by a single larger part.
            if left != 0 && left <= j {
                continue;
            }
            current.push(l as u32);
            go(j + 1, k, left, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All partitions of `k ≥ 1` in ascending lexicographic order of their
/// multiplicity vectors (memoized).
pub fn partitions(k: usize) -> Arc<Vec<Partition>> {
    assert!(k >= 1, "partitions: k must be positive");
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Partition>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&k) {
        return p.clone();
    }
    let p = Arc::new(generate(k));
    cache.write().unwrap().insert(k, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_cases() {
        let two: Vec<_> = partitions(2).iter().map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(two, vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(partitions(1).len(), 1);
        assert_eq!(partitions(1)[0].multiplicities(), &[1]);
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn counts_match_euler_recurrence() {
        // p(n) by the standard "largest part at most m" table.
        let n_max = 30;
        let mut table = vec![vec![0u64; n_max + 1]; n_max + 1];
        for m in 0..=n_max {
            table[0][m] = 1;
        }
        for n in 1..=n_max {
            for m in 1..=n_max {
                table[n][m] = table[n][m - 1] + if m <= n { table[n - m][m] } else { 0 };
            }
        }
        for k in 1..=n_max {
            let ps = partitions(k);
            assert_eq!(ps.len() as u64, table[k][k], "p({k})");
            assert!(ps.iter().all(|p| p.total() == k && p.multiplicities().len() == k));
            assert_eq!(ps.iter().collect::<HashSet<_>>().len(), ps.len());
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
