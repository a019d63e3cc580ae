//! Critical pairs, their classification, and the pending-pair queue.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::engine::Basis;
use crate::ground::{Monomial, PrimeField};
use crate::sig::{LabeledPoly, ModuleOrder, Signature};
use crate::{Error, Result};

/// One half `t * (u, f)` of a critical pair; `serial` names `(u, f)` in the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSide {
    pub mult: Monomial,
    pub serial: usize,
}

/// `[t_f (u, f), t_g (v, g)]`, oriented so that `lead_sig >= second_sig`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub first: PairSide,
    pub second: PairSide,
    pub lcm: Monomial,
    /// `lpp(t_f u)`
    pub lead_sig: Signature,
    /// `lpp(t_g v)`
    pub second_sig: Signature,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    /// The leading module terms cancel.
    NonRegular,
    /// Equal signatures whose leading module terms survive.
    SuperRegular,
    /// `lead_sig > second_sig`.
    Regular,
}

/// Builds the oriented critical pair of two nonzero basis elements. Equal
/// signatures put the lower serial first, so argument order never matters.
pub fn make_pair(mo: &ModuleOrder, a: &LabeledPoly, b: &LabeledPoly) -> Result<CriticalPair> {
    let la = a
        .poly
        .lpp()
        .ok_or(Error::Precondition("critical pair of a zero element"))?;
    let lb = b
        .poly
        .lpp()
        .ok_or(Error::Precondition("critical pair of a zero element"))?;
    let lcm = la.lcm(lb);
    let ta = lcm.div(la);
    let tb = lcm.div(lb);
    let sa = a.sig.try_mul(&ta)?;
    let sb = b.sig.try_mul(&tb)?;
    let a_first = match mo.cmp(&sa, &sb) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.serial <= b.serial,
    };
    let (first, second, lead_sig, second_sig) = if a_first {
        (
            PairSide {
                mult: ta,
                serial: a.serial,
            },
            PairSide {
                mult: tb,
                serial: b.serial,
            },
            sa,
            sb,
        )
    } else {
        (
            PairSide {
                mult: tb,
                serial: b.serial,
            },
            PairSide {
                mult: ta,
                serial: a.serial,
            },
            sb,
            sa,
        )
    };
    Ok(CriticalPair {
        first,
        second,
        lcm,
        lead_sig,
        second_sig,
    })
}

/// Classifies a pair against the basis holding both of its elements.
///
/// Equal signatures need the leading module coefficients to decide between
/// non-regular and super regular. Without stored module vectors those are
/// unknown and the pair is treated as non-regular.
pub fn classify(p: &CriticalPair, basis: &Basis, field: &PrimeField) -> Result<PairClass> {
    let f = basis
        .get(p.first.serial)
        .ok_or(Error::UnknownSerial(p.first.serial))?;
    let g = basis
        .get(p.second.serial)
        .ok_or(Error::UnknownSerial(p.second.serial))?;
    if p.lead_sig != p.second_sig {
        return Ok(PairClass::Regular);
    }
    if f.vector.is_none() || g.vector.is_none() {
        return Ok(PairClass::NonRegular);
    }
    let c = field.div(f.poly.lc(), g.poly.lc())?;
    if f.sig_lc == field.mul(c, g.sig_lc) {
        Ok(PairClass::NonRegular)
    } else {
        Ok(PairClass::SuperRegular)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    MinimalSignature,
    MinimalDegree,
    Fifo,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::MinimalSignature => "sig",
            Strategy::MinimalDegree => "deg",
            Strategy::Fifo => "fifo",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "sig" => Some(Strategy::MinimalSignature),
            "deg" => Some(Strategy::MinimalDegree),
            "fifo" => Some(Strategy::Fifo),
            _ => None,
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum InsertOutcome {
    Queued,
    /// The incoming pair displaced this pending pair with the same signature.
    Replaced(CriticalPair),
    /// The incoming pair lost to a pending pair with the same signature.
    Rejected(CriticalPair),
}

type QueueKey = (Vec<u64>, u64);

/// Pending critical pairs, popped according to a [`Strategy`]; ties go to
/// the earliest insertion.
#[derive(Debug)]
pub struct PairQueue {
    strategy: Strategy,
    dedup: bool,
    pending: BTreeMap<QueueKey, CriticalPair>,
    by_sig: BTreeMap<Signature, QueueKey>,
    seq: u64,
}

impl PairQueue {
    /// With `dedup`, at most one pending pair per leading signature is kept.
    pub fn new(strategy: Strategy, dedup: bool) -> Self {
        Self {
            strategy,
            dedup,
            pending: BTreeMap::new(),
            by_sig: BTreeMap::new(),
            seq: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.pending.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pending.is_empty()
    }

    fn key(&mut self, p: &CriticalPair, mo: &ModuleOrder) -> QueueKey {
        let seq = self.seq;
        self.seq += 1;
        let primary = match self.strategy {
            Strategy::MinimalSignature => mo.sort_key(&p.lead_sig),
            Strategy::MinimalDegree => alloc::vec![p.lcm.degree() as u64],
            Strategy::Fifo => Vec::new(),
        };
        (primary, seq)
    }

    /// Queues `p`. When deduplicating against a pending pair with the same
    /// leading signature, `first_smaller(incoming, incumbent)` decides
    /// whether the incoming pair replaces it; otherwise the incumbent stays.
    pub fn insert(
        &mut self,
        p: CriticalPair,
        mo: &ModuleOrder,
        first_smaller: impl FnOnce(&CriticalPair, &CriticalPair) -> bool,
    ) -> InsertOutcome {
        if self.dedup {
            if let Some(k) = self.by_sig.get(&p.lead_sig) {
                let incumbent = &self.pending[k];
                if !first_smaller(&p, incumbent) {
                    return InsertOutcome::Rejected(p);
                }
                let k = k.clone();
                let old = self.pending.remove(&k).expect("indexed pair is pending");
                let key = self.key(&p, mo);
                self.by_sig.insert(p.lead_sig.clone(), key.clone());
                self.pending.insert(key, p);
                return InsertOutcome::Replaced(old);
            }
            let key = self.key(&p, mo);
            self.by_sig.insert(p.lead_sig.clone(), key.clone());
            self.pending.insert(key, p);
        } else {
            let key = self.key(&p, mo);
            self.pending.insert(key, p);
        }
        InsertOutcome::Queued
    }

    pub fn pop(&mut self) -> Option<CriticalPair> {
        let (key, p) = self.pending.pop_first()?;
        if self.dedup && self.by_sig.get(&p.lead_sig) == Some(&key) {
            self.by_sig.remove(&p.lead_sig);
        }
        Some(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &CriticalPair> {
        self.pending.values()
    }
}
