//! Exact longest-common-extension queries between two strings.
//!
//! The index is a suffix array of `X · # · Y` (with `#` = 256, outside the
//! octet alphabet), its LCP array, and a range-minimum structure over the LCP
//! array. Queries take constant time: two rank lookups and one RMQ over at
//! most two partial blocks of 16 entries plus one sparse-table lookup.

use crate::error::{contract, Result};
use crate::text::ByteText;

const SEPARATOR: u32 = 256;
const BLOCK: usize = 16;

#[derive(Debug, Clone)]
pub struct LceIndex {
    len_x: usize,
    len_y: usize,
    rank: Vec<u32>,
    lcp: Vec<u32>,
    rmq: BlockRmq,
}

/// Builds the index, reading every character of `x` and `y` exactly once.
pub fn build_lce(x: &ByteText, y: &ByteText) -> LceIndex {
    let mut text = Vec::with_capacity(x.len() + y.len() + 1);
    text.extend((0..x.len()).map(|i| x.at(i) as u32));
    text.push(SEPARATOR);
    text.extend((0..y.len()).map(|j| y.at(j) as u32));
    LceIndex::from_symbols(&text, x.len(), y.len())
}

/// Checked query; out-of-range positions are a contract violation.
pub fn lce_query(idx: &LceIndex, x: usize, y: usize) -> Result<usize> {
    if x > idx.len_x || y > idx.len_y {
        return contract(format!(
            "lce_query({x}, {y}) outside [0..={}] x [0..={}]",
            idx.len_x, idx.len_y
        ));
    }
    Ok(idx.lce(x, y))
}

impl LceIndex {
    fn from_symbols(text: &[u32], len_x: usize, len_y: usize) -> Self {
        let sa = suffix_array(text, SEPARATOR as usize + 1);
        let n = text.len();
        let mut rank = vec![0u32; n];
        for (r, &p) in sa.iter().enumerate() {
            rank[p as usize] = r as u32;
        }
        let lcp = kasai(text, &sa, &rank);
        let rmq = BlockRmq::new(&lcp);
        LceIndex { len_x, len_y, rank, lcp, rmq }
    }

    pub fn len_x(&self) -> usize {
        self.len_x
    }

    pub fn len_y(&self) -> usize {
        self.len_y
    }

    /// `max{ l : X[x..x+l) = Y[y..y+l) }`. Panics if `x > |X|` or `y > |Y|`.
    #[inline]
    pub fn lce(&self, x: usize, y: usize) -> usize {
        assert!(x <= self.len_x && y <= self.len_y, "lce position out of range");
        if x == self.len_x || y == self.len_y {
            return 0;
        }
        let a = self.rank[x] as usize;
        let b = self.rank[self.len_x + 1 + y] as usize;
        let (lo, hi) = if a < b { (a + 1, b) } else { (b + 1, a) };
        self.rmq.min(&self.lcp, lo, hi) as usize
    }
}

/// Prefix-doubling suffix array with radix-sorted rounds, `O(n log n)`.
fn suffix_array(s: &[u32], alphabet: usize) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut rank: Vec<u32> = s.to_vec();
    let mut sa: Vec<u32> = vec![0; n];
    let mut tmp: Vec<u32> = vec![0; n];
    let mut order: Vec<u32> = vec![0; n];
    let mut classes = alphabet.max(n) + 1;
    let mut cnt = vec![0usize; classes];

    for &c in &rank {
        cnt[c as usize] += 1;
    }
    prefix_sums(&mut cnt);
    for i in (0..n).rev() {
        let c = rank[i] as usize;
        cnt[c] -= 1;
        sa[cnt[c]] = i as u32;
    }

    let mut k = 1usize;
    loop {
        let mut p = 0;
        for i in n.saturating_sub(k)..n {
            order[p] = i as u32;
            p += 1;
        }
        for &i in sa.iter() {
            if i as usize >= k {
                order[p] = i - k as u32;
                p += 1;
            }
        }
        cnt.clear();
        cnt.resize(classes, 0);
        for &r in &rank {
            cnt[r as usize] += 1;
        }
        prefix_sums(&mut cnt);
        for j in (0..n).rev() {
            let i = order[j] as usize;
            let c = rank[i] as usize;
            cnt[c] -= 1;
            sa[cnt[c]] = i as u32;
        }

        let second = |r: &[u32], i: usize| if i + k < n { r[i + k] as i64 } else { -1 };
        tmp[sa[0] as usize] = 0;
        let mut c = 1u32;
        for j in 1..n {
            let (a, b) = (sa[j - 1] as usize, sa[j] as usize);
            if rank[a] != rank[b] || second(&rank, a) != second(&rank, b) {
                c += 1;
            }
            tmp[b] = c - 1;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if c as usize == n {
            break;
        }
        classes = c as usize;
        k *= 2;
    }
    sa
}

fn prefix_sums(cnt: &mut [usize]) {
    let mut acc = 0;
    for c in cnt.iter_mut() {
        acc += *c;
        *c = acc;
    }
}

/// `lcp[r]` = longest common prefix of the suffixes ranked `r-1` and `r`.
fn kasai(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Range minimum over fixed blocks with a sparse table on block minima.
#[derive(Debug, Clone)]
struct BlockRmq {
    table: Vec<Vec<u32>>,
}

impl BlockRmq {
    fn new(a: &[u32]) -> Self {
        let minima: Vec<u32> = a
            .chunks(BLOCK)
            .map(|c| c.iter().copied().min().unwrap_or(u32::MAX))
            .collect();
        let mut table = vec![minima];
        let mut w = 1;
        while 2 * w <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - w).map(|i| prev[i].min(prev[i + w])).collect();
            table.push(next);
            w *= 2;
        }
        BlockRmq { table }
    }

    /// Minimum of `a[lo..=hi]`, `lo <= hi`.
    #[inline]
    fn min(&self, a: &[u32], lo: usize, hi: usize) -> u32 {
        let (bl, bh) = (lo / BLOCK, hi / BLOCK);
        if bh <= bl + 1 {
            return a[lo..=hi].iter().copied().min().unwrap();
        }
        let head = a[lo..(bl + 1) * BLOCK].iter().copied().min().unwrap();
        let tail = a[bh * BLOCK..=hi].iter().copied().min().unwrap();
        let (l, r) = (bl + 1, bh - 1);
        let lvl = (usize::BITS - 1 - (r - l + 1).leading_zeros()) as usize;
        let row = &self.table[lvl];
        head.min(tail).min(row[l]).min(row[r + 1 - (1 << lvl)])
    }
}
