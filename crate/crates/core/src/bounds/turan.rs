use crate::error::{Error, Result};
use crate::hypercomb::{subsets_of_size, VertexSet};

const MAX_N: usize = 12;
const DEFAULT_BUDGET: u64 = 50_000_000;

/// `T(n, k, l)`: the fewest `l`-subsets of `[n]` such that every `k`-subset
/// contains one of them. Exact branch and bound; refuses `n > 12`.
pub fn turan_number(n: usize, k: usize, l: usize) -> Result<u64> {
    turan_number_with_budget(n, k, l, DEFAULT_BUDGET)
}

pub fn turan_number_with_budget(n: usize, k: usize, l: usize, budget: u64) -> Result<u64> {
    if n > MAX_N {
        return Err(Error::TooLarge(format!("Turán numbers need n <= {MAX_N}, got {n}")));
    }
    if l > k {
        return Err(Error::BadParams(format!("need l <= k, got l={l} k={k}")));
    }
    if k > n {
        return Ok(0);
    }
    if l == 0 {
        return Ok(1);
    }
    // each chosen set avoids n - l vertices, and for every vertex v the sets
    // avoiding v must cover the k-subsets of [n] - v
    let sub = if n > k { turan_number_with_budget(n - 1, k, l, budget)? as usize } else { 0 };
    let universe = VertexSet::full(n);
    let ksets: Vec<VertexSet> = subsets_of_size(universe, k).collect();
    let lsets: Vec<VertexSet> = subsets_of_size(universe, l).collect();
    let words = ksets.len().div_ceil(64);
    let covers: Vec<Vec<u64>> = lsets
        .iter()
        .map(|s| {
            let mut bits = vec![0u64; words];
            for (i, ks) in ksets.iter().enumerate() {
                if s.is_subset(*ks) {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect();
    let max_cover = covers[0].iter().map(|w| w.count_ones() as usize).sum::<usize>();
    let inside: Vec<Vec<usize>> = ksets
        .iter()
        .map(|ks| (0..lsets.len()).filter(|&j| lsets[j].is_subset(*ks)).collect())
        .collect();

    let mut search = Search {
        ksets: &ksets,
        inside: &inside,
        covers: &covers,
        max_cover,
        lsets: &lsets,
        n,
        l,
        sub,
        best: greedy(&covers, ksets.len()),
        nodes: 0,
        budget,
    };
    // every first choice is equivalent under relabeling, so fix {1..l}
    let mut covered = vec![0u64; words];
    or_into(&mut covered, &covers[0]);
    let avoid: Vec<usize> = (1..=n).map(|v| usize::from(!lsets[0].contains(v))).collect();
    search.go(&covered, &avoid, 1)?;
    Ok(search.best as u64)
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn greedy(covers: &[Vec<u64>], total: usize) -> usize {
    let mut covered = vec![0u64; covers[0].len()];
    let mut used = 0;
    while count(&covered) < total {
        let best = covers
            .iter()
            .max_by_key(|c| c.iter().zip(&covered).map(|(a, b)| (a & !b).count_ones()).sum::<u32>())
            .expect("nonempty");
        or_into(&mut covered, best);
        used += 1;
    }
    used
}

struct Search<'a> {
    ksets: &'a [VertexSet],
    /// `l`-set indices contained in each `k`-set
    inside: &'a [Vec<usize>],
    covers: &'a [Vec<u64>],
    lsets: &'a [VertexSet],
    n: usize,
    l: usize,
    /// `T(n - 1, k, l)`
    sub: usize,
    max_cover: usize,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Uncovered `k`-sets pairwise sharing no `l`-subset each need their own
    /// member, so a greedy packing of them is a lower bound.
    fn packing(&self, covered: &[u64]) -> usize {
        let mut blocked = vec![false; self.covers.len()];
        let mut size = 0;
        for (i, inside) in self.inside.iter().enumerate() {
            if covered[i / 64] >> (i % 64) & 1 == 1 || inside.iter().any(|&j| blocked[j]) {
                continue;
            }
            for &j in inside {
                blocked[j] = true;
            }
            size += 1;
        }
        size
    }

    fn deficit(&self, avoid: &[usize]) -> usize {
        if self.n == self.l {
            return 0;
        }
        let short: usize = avoid.iter().map(|&c| self.sub.saturating_sub(c)).sum();
        short.div_ceil(self.n - self.l)
    }

    fn go(&mut self, covered: &[u64], avoid: &[usize], chosen: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        let uncovered = self.ksets.len() - count(covered);
        if uncovered == 0 {
            self.best = self.best.min(chosen);
            return Ok(());
        }
        if chosen + uncovered.div_ceil(self.max_cover) >= self.best
            || chosen + self.packing(covered) >= self.best
            || chosen + self.deficit(avoid) >= self.best
        {
            return Ok(());
        }
        let first = covered
            .iter()
            .enumerate()
            .find(|(_, w)| **w != u64::MAX)
            .map(|(i, w)| i * 64 + (!w).trailing_zeros() as usize)
            .expect("some k-set is uncovered");
        for &idx in &self.inside[first] {
            let mut next = covered.to_vec();
            or_into(&mut next, &self.covers[idx]);
            let s = self.lsets[idx];
            let next_avoid: Vec<usize> = avoid
                .iter()
                .enumerate()
                .map(|(i, &c)| c + usize::from(!s.contains(i + 1)))
                .collect();
            self.go(&next, &next_avoid, chosen + 1)?;
        }
        Ok(())
    }
}
