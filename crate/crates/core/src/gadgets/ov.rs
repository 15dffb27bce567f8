use serde::{Deserialize, Serialize};

use super::alignment::{gadget_x, gadget_y};
use super::measure::{coordinate_x, coordinate_y, pad_dollar};
use super::or_comp::or_composition;
use crate::cost::Threshold;
use crate::error::{contract, Result};
use crate::oracle::{oracle_d_a, DEFAULT_CELL_LIMIT};
use crate::rng::RandomSource;
use crate::text::ByteText;

/// Two sets of binary vectors of a common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvInstance {
    pub u: Vec<Vec<u8>>,
    pub v: Vec<Vec<u8>>,
    pub d: usize,
}

impl OvInstance {
    pub fn new(u: Vec<Vec<u8>>, v: Vec<Vec<u8>>) -> Result<Self> {
        let d = u.first().or(v.first()).map_or(0, |w| w.len());
        if u.iter().chain(&v).any(|w| w.len() != d || w.iter().any(|&c| c > 1)) {
            return contract("OV vectors must share one dimension and have 0/1 entries");
        }
        Ok(OvInstance { u, v, d })
    }

    /// `n` uniform vectors per side with each coordinate set independently
    /// with probability `density`.
    pub fn random(n: usize, d: usize, density: f64, seed: u64) -> Self {
        let mut rng = RandomSource::new(seed);
        let mut draw = || (0..d).map(|_| u8::from(rng.bernoulli(density))).collect::<Vec<u8>>();
        let u = (0..n).map(|_| draw()).collect();
        let v = (0..n).map(|_| draw()).collect();
        OvInstance { u, v, d }
    }
}

/// Provenance and parameters of a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMeta {
    pub construction: String,
    pub a: u64,
    pub threshold_units: u64,
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub seed: Option<u64>,
    /// Largest symbol occurring in `X` or `Y`.
    pub alphabet_max: u8,
    /// Lengths of the composed block strings.
    pub ell_x: usize,
    pub ell_y: usize,
    pub blocks: usize,
    /// Whether `a` is at least the number of composed blocks.
    pub composition_exact: bool,
    pub warning: Option<String>,
    pub reference: ReferenceValues,
    pub u: Vec<String>,
    pub v: Vec<String>,
}

/// `D_a^+` values measured by the oracle on reference inputs, in units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceValues {
    /// Vector gadget on an orthogonal pair.
    pub orthogonal_pair: u64,
    /// Vector gadget on the dummy vector against any Y-side vector.
    pub dummy_pair: u64,
    /// Block threshold: any block holding an orthogonal pair is at most this.
    pub block_threshold: u64,
    /// A block built from all-zero vectors.
    pub zero_block: u64,
}

/// A weighted edit distance instance with its decision threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetInstance {
    pub x: Vec<u8>,
    pub y: Vec<u8>,
    pub threshold_units: u64,
    pub weight_a: u64,
    pub meta: GadgetMeta,
}

impl GadgetInstance {
    pub fn threshold(&self) -> Threshold {
        Threshold::from_units(self.threshold_units, self.weight_a)
    }

    pub fn texts(&self) -> (ByteText, ByteText) {
        (ByteText::new(self.x.clone()), ByteText::new(self.y.clone()))
    }
}

const COORD_SIGMA: u8 = 2;
const VECTOR_SIGMA: u8 = 4;

/// Precomputed layout and thresholds for reducing OV instances of a fixed
/// shape `(n, d)` at weight `a` with `m` blocks per side.
#[derive(Debug, Clone)]
pub struct OvReduction {
    pub n: usize,
    pub d: usize,
    pub a: u64,
    pub m: usize,
    block_size: usize,
    reference: ReferenceValues,
}

fn plus_oracle(x: &[u8], y: &[u8], a: u64) -> Result<u64> {
    oracle_d_a(&pad_dollar(x, y.len()), y, a, DEFAULT_CELL_LIMIT)
}

impl OvReduction {
    pub fn new(n: usize, d: usize, a: u64, m: usize) -> Result<Self> {
        if n == 0 || m == 0 || m > n {
            return contract(format!("block parameter must satisfy 1 <= m <= n, got m={m}, n={n}"));
        }
        if a == 0 {
            return contract("weight a must be positive");
        }
        let block_size = n.div_ceil(m);
        let mut r = OvReduction {
            n,
            d,
            a,
            m,
            block_size,
            reference: ReferenceValues { orthogonal_pair: 0, dummy_pair: 0, block_threshold: 0, zero_block: 0 },
        };
        let zero = vec![0u8; d];
        let (zx, zy) = (r.vector_x(&zero), r.vector_y(&zero));
        let orthogonal_pair = plus_oracle(&zx, &zy, a)?;
        let dummy_pair = plus_oracle(&r.dummy_x(), &zy, a)?;
        let s = block_size;
        let block_threshold = if s == 1 {
            orthogonal_pair
        } else {
            let items = s + (s + 1) * (s - 1);
            (items + s) as u64 * zy.len() as u64 + orthogonal_pair + (s as u64 - 1) * dummy_pair
        };
        r.reference.orthogonal_pair = orthogonal_pair;
        r.reference.dummy_pair = dummy_pair;
        r.reference.block_threshold = block_threshold;
        let zeros = vec![zero; s];
        let (bx, by) = r.block(&zeros, &zeros);
        r.reference.zero_block = plus_oracle(&bx, &by, a)?;
        if r.reference.zero_block > block_threshold {
            return contract("reference block exceeds the composed block threshold");
        }
        Ok(r)
    }

    pub fn reference(&self) -> ReferenceValues {
        self.reference
    }

    fn vector_x(&self, u: &[u8]) -> Vec<u8> {
        let coords: Vec<Vec<u8>> = u.iter().chain([&0]).map(|&b| coordinate_x(b)).collect();
        gadget_x(&coords, COORD_SIGMA, 1)
    }

    fn vector_y(&self, v: &[u8]) -> Vec<u8> {
        let coords: Vec<Vec<u8>> = v.iter().chain([&1]).map(|&b| coordinate_y(b)).collect();
        gadget_y(&coords, self.d + 1, COORD_SIGMA)
    }

    fn dummy_x(&self) -> Vec<u8> {
        let coords: Vec<Vec<u8>> = (0..self.d).map(|_| coordinate_x(0)).chain([coordinate_x(1)]).collect();
        gadget_x(&coords, COORD_SIGMA, 1)
    }

    fn block(&self, us: &[Vec<u8>], vs: &[Vec<u8>]) -> (Vec<u8>, Vec<u8>) {
        if self.block_size == 1 {
            return (self.vector_x(&us[0]), self.vector_y(&vs[0]));
        }
        let gap = self.block_size - 1;
        let z = self.dummy_x();
        let mut items = vec![z.clone(); gap];
        for u in us {
            items.push(self.vector_x(u));
            items.extend(std::iter::repeat_n(z.clone(), gap));
        }
        let ys: Vec<Vec<u8>> = vs.iter().map(|v| self.vector_y(v)).collect();
        let ell = ys[0].len();
        (gadget_x(&items, VECTOR_SIGMA, ell), gadget_y(&ys, items.len(), VECTOR_SIGMA))
    }

    fn cover<'v>(&self, vs: &'v [Vec<u8>], i: usize) -> &'v [Vec<u8>] {
        let start = (i * self.block_size).min(self.n - self.block_size);
        &vs[start..start + self.block_size]
    }

    /// Builds the instance for `inst`, whose shape must match.
    pub fn build(&self, inst: &OvInstance, seed: Option<u64>) -> Result<GadgetInstance> {
        if inst.u.len() != self.n || inst.v.len() != self.n || inst.d != self.d {
            return contract("OV instance shape does not match the reduction");
        }
        let mut pairs = Vec::with_capacity(self.m * self.m);
        for i in 0..self.m {
            for j in 0..self.m {
                pairs.push(self.block(self.cover(&inst.u, i), self.cover(&inst.v, j)));
            }
        }
        let blocks = pairs.len();
        let comp = or_composition(&pairs, self.a)?;
        let extra = (comp.x.len() - comp.y.len()) as u64;
        let threshold_units = comp.offset_units(blocks) + self.reference.block_threshold + self.a * extra;
        let alphabet_max = comp.x.iter().chain(&comp.y).copied().max().unwrap_or(0);
        let show = |w: &Vec<u8>| w.iter().map(|&b| char::from(b'0' + b)).collect::<String>();
        let meta = GadgetMeta {
            construction: "ov-reduce-v1".into(),
            a: self.a,
            threshold_units,
            n: self.n,
            m: self.m,
            d: self.d,
            seed,
            alphabet_max,
            ell_x: comp.ell_x,
            ell_y: comp.ell_y,
            blocks,
            composition_exact: comp.warning.is_none(),
            warning: comp.warning,
            reference: self.reference,
            u: inst.u.iter().map(show).collect(),
            v: inst.v.iter().map(show).collect(),
        };
        Ok(GadgetInstance { x: comp.x, y: comp.y, threshold_units, weight_a: self.a, meta })
    }
}

/// Reduces an OV instance to a thresholded `ED_a` instance with `m` blocks
/// per side.
pub fn ov_reduce(inst: &OvInstance, a: u64, m: usize) -> Result<GadgetInstance> {
    OvReduction::new(inst.u.len(), inst.d, a, m)?.build(inst, None)
}
