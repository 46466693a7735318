use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::SMonomial;
use crate::partitions::enumerate_partitions;

/// Dense numbering of every s-monomial of weight at most `weight_cap`, ordered
/// by weight and then by canonical partition order. Lets hot loops work on
/// plain vectors instead of maps.
#[derive(Debug)]
pub struct MonomialIndex {
    weight_cap: usize,
    monomials: Vec<SMonomial>,
    ids: HashMap<SMonomial, usize>,
    weight_start: Vec<usize>,
    /// `times_var[id * (W + 1) + j]` is the id of `monomial(id) · s_j`.
    times_var: Vec<Option<u32>>,
}

impl MonomialIndex {
    fn build(weight_cap: usize) -> Self {
        let mut monomials = Vec::new();
        let mut weight_start = Vec::with_capacity(weight_cap + 2);
        for w in 0..=weight_cap {
            weight_start.push(monomials.len());
            monomials.extend(enumerate_partitions(w));
        }
        weight_start.push(monomials.len());
        let ids: HashMap<SMonomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let stride = weight_cap + 1;
        let mut times_var = vec![None; monomials.len() * stride];
        for (id, m) in monomials.iter().enumerate() {
            for j in 1..=weight_cap.saturating_sub(m.size()) {
                times_var[id * stride + j] = Some(ids[&m.with_part(j)] as u32);
            }
        }
        Self { weight_cap, monomials, ids, weight_start, times_var }
    }

    pub fn weight_cap(&self) -> usize {
        self.weight_cap
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, id: usize) -> &SMonomial {
        &self.monomials[id]
    }

    pub fn id(&self, m: &SMonomial) -> Option<usize> {
        self.ids.get(m).copied()
    }

    /// Number of monomials of weight at most `w` (they occupy ids `0..count`).
    pub fn count_up_to(&self, w: usize) -> usize {
        self.weight_start[w.min(self.weight_cap) + 1]
    }

    /// First id of weight `w`.
    pub fn weight_start(&self, w: usize) -> usize {
        self.weight_start[w.min(self.weight_cap + 1)]
    }

    /// Id of `monomial(id) · s_j`, or `None` above the cap.
    pub fn times_var(&self, id: usize, j: usize) -> Option<usize> {
        if j > self.weight_cap {
            return None;
        }
        self.times_var[id * (self.weight_cap + 1) + j].map(|x| x as usize)
    }
}

/// Shared index for `weight_cap`, built on first use.
pub fn monomial_index(weight_cap: usize) -> Arc<MonomialIndex> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<MonomialIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(idx) = cache.read().expect("monomial index cache poisoned").get(&weight_cap) {
        return Arc::clone(idx);
    }
    let built = Arc::new(MonomialIndex::build(weight_cap));
    Arc::clone(cache.write().expect("monomial index cache poisoned").entry(weight_cap).or_insert(built))
}
