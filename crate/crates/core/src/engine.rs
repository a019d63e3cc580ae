//! The main loop: pair selection, criteria, signature-preserving reduction,
//! syzygy recording, and extraction of the reduced Gröbner basis.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::criteria::{
    eventually_super_top_reducible, gvw_divisible, pair_rewritable, po_less, AdmissibilityMonitor,
    OrderView, PartialOrderKind, SuperTopOutcome, Violation,
};
use crate::ground::{FieldElement, Monomial};
use crate::pairs::{
    classify, make_pair, CriticalPair, InsertOutcome, PairClass, PairQueue, Strategy,
};
use crate::poly::{Polynomial, Ring};
use crate::sig::{
    koszul_syzygy, principal_syzygies, vector_is_consistent, LabeledPoly, ModuleOrder, SigPoly,
    Signature, SyzygyOrigin, SyzygyRecord,
};
use crate::{Error, Result};

/// Everything fixed for the duration of a run.
#[derive(Clone, Debug)]
pub struct Context {
    pub ring: Ring,
    pub module_order: ModuleOrder,
    /// The nonzero input generators `f_1, ..., f_m`.
    pub inputs: Vec<Polynomial>,
    one: Monomial,
}

impl Context {
    pub fn new(ring: Ring, module_order: ModuleOrder, inputs: Vec<Polynomial>) -> Self {
        let one = ring.one();
        Self {
            ring,
            module_order,
            inputs,
            one,
        }
    }
}

/// A member of `G`, looked up by serial.
#[derive(Clone, Copy, Debug)]
pub enum Member<'a> {
    Nonzero(&'a LabeledPoly),
    Syzygy(&'a SyzygyRecord),
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    Nonzero(usize),
    Syzygy(usize),
}

/// The set `G`: nonzero elements and syzygy records, both append-only.
/// Serials count insertions across both kinds.
#[derive(Clone, Debug, Default)]
pub struct Basis {
    nonzero: Vec<LabeledPoly>,
    lead_masks: Vec<u64>,
    sig_masks: Vec<u64>,
    nonzero_by_index: Vec<Vec<usize>>,
    syzygies: Vec<SyzygyRecord>,
    syz_masks: Vec<u64>,
    syz_by_index: Vec<Vec<usize>>,
    slots: Vec<Slot>,
}

impl Basis {
    pub fn new(m: usize) -> Self {
        Self {
            nonzero_by_index: alloc::vec![Vec::new(); m],
            syz_by_index: alloc::vec![Vec::new(); m],
            ..Self::default()
        }
    }

    /// Number of serials handed out so far.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    fn grow(by_index: &mut Vec<Vec<usize>>, index: usize) -> &mut Vec<usize> {
        if by_index.len() <= index {
            by_index.resize_with(index + 1, Vec::new);
        }
        &mut by_index[index]
    }

    /// Inserts a nonzero element and returns its serial.
    ///
    /// # Panics
    /// If `e.poly` is zero.
    pub fn push_nonzero(&mut self, e: SigPoly) -> usize {
        let lead = e
            .poly
            .lpp()
            .expect("push_nonzero with a zero polynomial")
            .divmask();
        let serial = self.slots.len();
        let pos = self.nonzero.len();
        self.lead_masks.push(lead);
        self.sig_masks.push(e.sig.mono.divmask());
        Self::grow(&mut self.nonzero_by_index, e.sig.index).push(pos);
        self.nonzero.push(LabeledPoly::from_sigpoly(serial, e));
        self.slots.push(Slot::Nonzero(pos));
        serial
    }

    /// Inserts a syzygy record, overwriting its serial, and returns the serial.
    pub fn push_syzygy(&mut self, mut s: SyzygyRecord) -> usize {
        let serial = self.slots.len();
        let pos = self.syzygies.len();
        s.serial = serial;
        self.syz_masks.push(s.sig.mono.divmask());
        Self::grow(&mut self.syz_by_index, s.sig.index).push(pos);
        self.syzygies.push(s);
        self.slots.push(Slot::Syzygy(pos));
        serial
    }

    /// The nonzero element with this serial.
    pub fn get(&self, serial: usize) -> Option<&LabeledPoly> {
        match self.slots.get(serial)? {
            Slot::Nonzero(pos) => Some(&self.nonzero[*pos]),
            Slot::Syzygy(_) => None,
        }
    }

    pub fn member(&self, serial: usize) -> Option<Member<'_>> {
        Some(match self.slots.get(serial)? {
            Slot::Nonzero(pos) => Member::Nonzero(&self.nonzero[*pos]),
            Slot::Syzygy(pos) => Member::Syzygy(&self.syzygies[*pos]),
        })
    }

    pub fn members(&self) -> impl Iterator<Item = Member<'_>> {
        (0..self.len()).filter_map(|s| self.member(s))
    }

    /// Nonzero elements in insertion order.
    pub fn nonzero(&self) -> &[LabeledPoly] {
        &self.nonzero
    }

    pub fn syzygies(&self) -> &[SyzygyRecord] {
        &self.syzygies
    }

    /// Nonzero elements whose signature has this index, in insertion order.
    pub fn nonzero_at(&self, index: usize) -> impl Iterator<Item = &LabeledPoly> {
        self.nonzero_by_index
            .get(index)
            .into_iter()
            .flatten()
            .map(|&pos| &self.nonzero[pos])
    }

    pub fn syzygies_at(&self, index: usize) -> impl Iterator<Item = &SyzygyRecord> {
        self.syz_by_index
            .get(index)
            .into_iter()
            .flatten()
            .map(|&pos| &self.syzygies[pos])
    }

    /// Syzygy records whose signature divides `target`, in insertion order.
    pub fn syzygy_divisors<'a>(
        &'a self,
        target: &'a Signature,
    ) -> impl Iterator<Item = &'a SyzygyRecord> + 'a {
        let mask = target.mono.divmask();
        self.syz_by_index
            .get(target.index)
            .into_iter()
            .flatten()
            .filter(move |&&pos| self.syz_masks[pos] & !mask == 0)
            .map(|&pos| &self.syzygies[pos])
            .filter(move |s| s.sig.divides(target))
    }

    /// Nonzero elements whose signature divides `target`, in insertion order.
    pub fn nonzero_sig_divisors<'a>(
        &'a self,
        target: &'a Signature,
    ) -> impl Iterator<Item = &'a LabeledPoly> + 'a {
        let mask = target.mono.divmask();
        self.nonzero_by_index
            .get(target.index)
            .into_iter()
            .flatten()
            .filter(move |&&pos| self.sig_masks[pos] & !mask == 0)
            .map(|&pos| &self.nonzero[pos])
            .filter(move |e| e.sig.divides(target))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrderChoice {
    Pot,
    Schreyer,
}

impl ModuleOrderChoice {
    pub fn name(self) -> &'static str {
        match self {
            ModuleOrderChoice::Pot => "pot",
            ModuleOrderChoice::Schreyer => "schreyer",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "pot" => Some(ModuleOrderChoice::Pot),
            "schreyer" => Some(ModuleOrderChoice::Schreyer),
            _ => None,
        }
    }

    pub fn build(self, ring: &Ring, inputs: &[Polynomial]) -> Result<ModuleOrder> {
        match self {
            ModuleOrderChoice::Pot => Ok(ModuleOrder::pot(ring.order().clone(), inputs.len())),
            ModuleOrderChoice::Schreyer => ModuleOrder::schreyer(ring, inputs),
        }
    }
}

/// The criterion presets offered on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Reduce every regular pair.
    None,
    F5,
    Ratio,
    /// GVW's first, second and third criteria under the ratio order.
    Gvw,
    #[cfg(any(test, feature = "unsound-orders"))]
    EarlierUnsound,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::None => "none",
            Criterion::F5 => "f5",
            Criterion::Ratio => "ratio",
            Criterion::Gvw => "gvw",
            #[cfg(any(test, feature = "unsound-orders"))]
            Criterion::EarlierUnsound => "earlier-unsound",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "none" => Some(Criterion::None),
            "f5" => Some(Criterion::F5),
            "ratio" => Some(Criterion::Ratio),
            "gvw" => Some(Criterion::Gvw),
            #[cfg(any(test, feature = "unsound-orders"))]
            "earlier-unsound" => Some(Criterion::EarlierUnsound),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub module_order: ModuleOrderChoice,
    /// Partial order for the rewritable criterion; `None` disables it.
    pub order: Option<PartialOrderKind>,
    /// Replace the rewritable criterion by GVW's first and second criteria.
    pub gvw_criteria: bool,
    /// Keep one pending pair per signature.
    pub dedup: bool,
    pub strategy: Strategy,
    /// Track the module vector `u` of every element.
    pub full_vector: bool,
    /// Record principal and Koszul syzygies.
    pub koszul: bool,
    /// Maximum number of pairs taken from the queue.
    pub cap: u64,
    pub check_admissible: bool,
    /// Recompute `sum u_i f_i` for every inserted element (full-vector mode only).
    pub verify_vectors: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self::with_criterion(Criterion::Ratio)
    }
}

impl EngineConfig {
    pub const DEFAULT_CAP: u64 = 1_000_000;

    pub fn with_criterion(criterion: Criterion) -> Self {
        let (order, gvw_criteria, dedup) = match criterion {
            Criterion::None => (None, false, false),
            Criterion::F5 => (Some(PartialOrderKind::F5), false, false),
            Criterion::Ratio => (Some(PartialOrderKind::Ratio), false, false),
            Criterion::Gvw => (Some(PartialOrderKind::Ratio), true, true),
            #[cfg(any(test, feature = "unsound-orders"))]
            Criterion::EarlierUnsound => (Some(PartialOrderKind::EarlierUnsound), false, false),
        };
        Self {
            module_order: ModuleOrderChoice::Schreyer,
            order,
            gvw_criteria,
            dedup,
            strategy: Strategy::MinimalSignature,
            full_vector: true,
            koszul: true,
            cap: Self::DEFAULT_CAP,
            check_admissible: true,
            verify_vectors: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 {
            return Err(Error::InvalidConfig("iteration cap must be at least 1"));
        }
        if self.gvw_criteria && self.order != Some(PartialOrderKind::Ratio) {
            return Err(Error::InvalidConfig("GVW criteria require the ratio order"));
        }
        if self.dedup && self.order.is_none() {
            return Err(Error::InvalidConfig(
                "signature deduplication needs a partial order",
            ));
        }
        Ok(())
    }
}

/// Per-run counters. `pairs_generated` always equals
/// `rejected_nonregular + rejected_criterion + reduced`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunStats {
    pub pairs_generated: u64,
    /// Non-regular and super regular pairs.
    pub rejected_nonregular: u64,
    /// Pairs dropped by the rewritable, GVW or deduplication criteria.
    pub rejected_criterion: u64,
    pub reduced: u64,
    pub zero_reductions: u64,
    pub basis_nonzero: u64,
    pub reduced_gb_size: u64,
    /// Left at zero by the engine; callers with a clock fill it in.
    pub elapsed_ms: u64,
    pub syzygies: u64,
    pub admissibility_checks: u64,
    pub admissibility_violations: u64,
    pub vector_checks: u64,
    pub vector_check_failures: u64,
}

impl RunStats {
    pub fn is_conserved(&self) -> bool {
        self.pairs_generated == self.rejected_nonregular + self.rejected_criterion + self.reduced
    }
}

#[derive(Clone, Debug)]
pub struct Run {
    pub context: Context,
    pub basis: Basis,
    pub stats: RunStats,
    pub violations: Vec<Violation>,
    /// The reduced Gröbner basis, ascending by leading monomial.
    pub groebner_basis: Vec<Polynomial>,
}

struct Reducer {
    pos: usize,
    t: Monomial,
    equal: bool,
}

fn find_reducer(ctx: &Context, a: &SigPoly, basis: &Basis) -> Result<Option<Reducer>> {
    let lead = a
        .poly
        .terms()
        .first()
        .ok_or(Error::Precondition("reduction of a zero polynomial"))?;
    let lm = &lead.mono;
    let lmask = lm.divmask();
    let mo = &ctx.module_order;
    let field = ctx.ring.field();
    let full = a.vector.is_some();
    let mut best: Option<Reducer> = None;
    for (pos, g) in basis.nonzero.iter().enumerate() {
        if basis.lead_masks[pos] & !lmask != 0 {
            continue;
        }
        let lg = g.poly.lpp().expect("nonzero member");
        if !lg.divides(lm) {
            continue;
        }
        let t = lm.div(lg);
        let equal = match mo.cmp_scaled(&t, &g.sig, &ctx.one, &a.sig) {
            Ordering::Less => false,
            Ordering::Greater => continue,
            Ordering::Equal => {
                if !full || g.vector.is_none() {
                    continue;
                }
                let c = field.div(lead.coeff, g.poly.lc())?;
                if field.sub(a.sig_lc, field.mul(c, g.sig_lc)).is_zero() {
                    continue;
                }
                true
            }
        };
        if let Some(b) = &best {
            if mo.cmp_scaled(&t, &g.sig, &b.t, &basis.nonzero[b.pos].sig) != Ordering::Less {
                continue;
            }
        }
        best = Some(Reducer { pos, t, equal });
    }
    Ok(best)
}

fn apply_reducer(ctx: &Context, a: &mut SigPoly, basis: &Basis, r: &Reducer) -> Result<()> {
    let ring = &ctx.ring;
    let field = ring.field();
    let g = &basis.nonzero[r.pos];
    let c = field.div(a.poly.lc(), g.poly.lc())?;
    a.poly = ring.sub_scaled(&a.poly, c, &r.t, &g.poly);
    if let (Some(u), Some(v)) = (a.vector.as_mut(), g.vector.as_ref()) {
        for (uj, vj) in u.iter_mut().zip(v) {
            if !vj.is_zero() {
                *uj = ring.sub_scaled(uj, c, &r.t, vj);
            }
        }
    }
    if r.equal {
        a.sig_lc = field.sub(a.sig_lc, field.mul(c, g.sig_lc));
    }
    Ok(())
}

/// One signature-preserving top-reduction of `a` by `basis`, if any applies.
///
/// A nonzero `(v, g)` reduces `a` when `lpp(g) | lpp(f)` and, with
/// `t = lpp(f) / lpp(g)`, either `t sig(v) < sig(a)`, or the two signatures
/// are equal and their leading module coefficients do not cancel. The second
/// case needs module vectors. Among candidates the smallest `t sig(v)` wins,
/// then the lowest serial.
pub fn sig_reduce_step(ctx: &Context, a: &SigPoly, basis: &Basis) -> Result<Option<SigPoly>> {
    match find_reducer(ctx, a, basis)? {
        Some(r) => {
            let mut out = a.clone();
            apply_reducer(ctx, &mut out, basis, &r)?;
            Ok(Some(out))
        }
        None => Ok(None),
    }
}

/// Reduces `a` in place until no step applies or its polynomial is zero.
/// Returns whether any step was taken.
pub fn sig_reduce(ctx: &Context, a: &mut SigPoly, basis: &Basis) -> Result<bool> {
    let mut any = false;
    while !a.poly.is_zero() {
        let Some(r) = find_reducer(ctx, a, basis)? else {
            break;
        };
        #[cfg(debug_assertions)]
        let sig = a.sig.clone();
        apply_reducer(ctx, a, basis, &r)?;
        #[cfg(debug_assertions)]
        debug_assert_eq!(sig, a.sig);
        any = true;
    }
    Ok(any)
}

/// The reduced Gröbner basis spanned by the nonzero elements of `basis`.
pub fn extract_gb(ring: &Ring, basis: &Basis) -> Vec<Polynomial> {
    let polys: Vec<Polynomial> = basis.nonzero().iter().map(|e| e.poly.clone()).collect();
    ring.interreduce(&polys)
}

struct Engine<'c> {
    ctx: Context,
    cfg: &'c EngineConfig,
    basis: Basis,
    queue: PairQueue,
    stats: RunStats,
    monitor: AdmissibilityMonitor,
}

impl Engine<'_> {
    fn enqueue(&mut self, p: CriticalPair) {
        let mo = &self.ctx.module_order;
        debug_assert_ne!(mo.cmp(&p.lead_sig, &p.second_sig), Ordering::Less);
        self.stats.pairs_generated += 1;
        let basis = &self.basis;
        let term = self.ctx.ring.order();
        let order = self.cfg.order;
        let outcome = self.queue.insert(p, mo, |incoming, incumbent| {
            let (Some(kind), Some(a), Some(b)) = (
                order,
                basis.get(incoming.first.serial),
                basis.get(incumbent.first.serial),
            ) else {
                return false;
            };
            po_less(&OrderView::of(a), &OrderView::of(b), kind, term)
        });
        match outcome {
            InsertOutcome::Queued => {}
            InsertOutcome::Replaced(_) | InsertOutcome::Rejected(_) => {
                self.stats.rejected_criterion += 1
            }
        }
    }

    /// Pairs born together enter the queue in signature order.
    fn enqueue_batch(&mut self, mut pairs: Vec<CriticalPair>) {
        let mo = &self.ctx.module_order;
        pairs.sort_by(|a, b| mo.cmp(&a.lead_sig, &b.lead_sig));
        for p in pairs {
            self.enqueue(p);
        }
    }

    fn check_vector(&mut self, serial: usize) {
        if !(self.cfg.verify_vectors && self.cfg.full_vector) {
            return;
        }
        let ctx = &self.ctx;
        let ok = match self.basis.member(serial) {
            Some(Member::Nonzero(e)) => e.vector.as_ref().is_some_and(|v| {
                vector_is_consistent(
                    &ctx.ring,
                    &ctx.module_order,
                    &ctx.inputs,
                    v,
                    &e.sig,
                    Some(e.sig_lc),
                    &e.poly,
                )
            }),
            Some(Member::Syzygy(s)) => s.vector.as_ref().is_some_and(|v| {
                vector_is_consistent(
                    &ctx.ring,
                    &ctx.module_order,
                    &ctx.inputs,
                    v,
                    &s.sig,
                    None,
                    &Polynomial::zero(),
                )
            }),
            None => false,
        };
        self.stats.vector_checks += 1;
        if !ok {
            self.stats.vector_check_failures += 1;
        }
    }

    fn push_syzygy(&mut self, s: SyzygyRecord) {
        let serial = self.basis.push_syzygy(s);
        self.stats.syzygies += 1;
        self.check_vector(serial);
    }

    /// Whether the pair is dropped by the configured criterion.
    fn criterion_rejects(&mut self, p: &CriticalPair) -> Result<bool> {
        let Some(kind) = self.cfg.order else {
            return Ok(false);
        };
        if !self.cfg.gvw_criteria {
            return pair_rewritable(p, &self.basis, kind, self.ctx.ring.order());
        }
        let first = self
            .basis
            .get(p.first.serial)
            .ok_or(Error::UnknownSerial(p.first.serial))?;
        if gvw_divisible(&p.first.mult, first, &self.basis)? {
            return Ok(true);
        }
        match eventually_super_top_reducible(&self.ctx, &p.first.mult, first, &self.basis)? {
            SuperTopOutcome::NotReducible => Ok(false),
            SuperTopOutcome::Reducible { .. } => Ok(true),
            SuperTopOutcome::Syzygy(e) => {
                self.push_syzygy(SyzygyRecord::new(
                    e.sig,
                    SyzygyOrigin::ZeroReduction,
                    e.vector,
                ));
                Ok(true)
            }
        }
    }

    fn spoly(&self, p: &CriticalPair) -> Result<SigPoly> {
        let ring = &self.ctx.ring;
        let f = self
            .basis
            .get(p.first.serial)
            .ok_or(Error::UnknownSerial(p.first.serial))?;
        let g = self
            .basis
            .get(p.second.serial)
            .ok_or(Error::UnknownSerial(p.second.serial))?;
        let c = ring.field().div(f.poly.lc(), g.poly.lc())?;
        let one = FieldElement::ONE;
        let combine = |a: &Polynomial, b: &Polynomial| {
            ring.sub_scaled(&ring.mul_term(one, &p.first.mult, a), c, &p.second.mult, b)
        };
        let vector = match (&f.vector, &g.vector) {
            (Some(u), Some(v)) => Some(u.iter().zip(v).map(|(uj, vj)| combine(uj, vj)).collect()),
            _ => None,
        };
        Ok(SigPoly {
            sig: p.lead_sig.clone(),
            sig_lc: f.sig_lc,
            poly: combine(&f.poly, &g.poly),
            vector,
        })
    }

    fn insert_nonzero(&mut self, e: SigPoly) -> Result<usize> {
        let serial = self.basis.push_nonzero(e);
        self.check_vector(serial);
        let mut pairs = Vec::new();
        {
            let new = self.basis.get(serial).expect("just inserted");
            for other in self.basis.nonzero() {
                if other.serial != serial {
                    pairs.push(make_pair(&self.ctx.module_order, new, other)?);
                }
            }
        }
        self.enqueue_batch(pairs);
        if self.cfg.koszul {
            for i in 0..self.ctx.inputs.len() {
                let new = self.basis.get(serial).expect("just inserted");
                if let Some(s) = koszul_syzygy(
                    &self.ctx.ring,
                    new,
                    i,
                    &self.ctx.inputs[i],
                    &self.ctx.module_order,
                )? {
                    self.push_syzygy(s);
                }
            }
        }
        Ok(serial)
    }

    fn run(&mut self, stop: &dyn Fn(&RunStats) -> bool) -> Result<()> {
        let m = self.ctx.inputs.len();
        for (i, f) in self.ctx.inputs.clone().into_iter().enumerate() {
            let serial = self.basis.push_nonzero(SigPoly::generator(
                &self.ctx.ring,
                i,
                m,
                f,
                self.cfg.full_vector,
            ));
            self.check_vector(serial);
        }
        let mut initial = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                initial.push(make_pair(
                    &self.ctx.module_order,
                    &self.basis.nonzero()[a],
                    &self.basis.nonzero()[b],
                )?);
            }
        }
        self.enqueue_batch(initial);
        if self.cfg.koszul {
            for s in principal_syzygies(
                &self.ctx.ring,
                &self.ctx.inputs,
                &self.ctx.module_order,
                self.cfg.full_vector,
            )? {
                self.push_syzygy(s);
            }
        }

        let mut pops = 0u64;
        while let Some(p) = self.queue.pop() {
            pops += 1;
            if pops > self.cfg.cap {
                return Err(Error::CapExceeded(self.cfg.cap));
            }
            if stop(&self.stats) {
                return Err(Error::Interrupted(pops - 1));
            }
            if classify(&p, &self.basis, self.ctx.ring.field())? != PairClass::Regular {
                self.stats.rejected_nonregular += 1;
                continue;
            }
            if self.criterion_rejects(&p)? {
                self.stats.rejected_criterion += 1;
                continue;
            }
            self.stats.reduced += 1;
            let mut e = self.spoly(&p)?;
            sig_reduce(&self.ctx, &mut e, &self.basis)?;
            let child = if e.poly.is_zero() {
                self.stats.zero_reductions += 1;
                let serial = self.basis.len();
                self.push_syzygy(SyzygyRecord::new(
                    e.sig,
                    SyzygyOrigin::ZeroReduction,
                    e.vector,
                ));
                serial
            } else {
                self.insert_nonzero(e)?
            };
            if let Some(kind) = self.cfg.order {
                let parent = self.basis.get(p.first.serial).expect("pair member");
                let child = self.basis.member(child).expect("just inserted");
                self.monitor.check(
                    &OrderView::of(parent),
                    &OrderView::of_member(child),
                    kind,
                    self.ctx.ring.order(),
                );
                self.stats.admissibility_checks = self.monitor.checks();
                self.stats.admissibility_violations = self.monitor.violations().len() as u64;
            }
        }
        Ok(())
    }
}

/// Runs the signature-based algorithm on `inputs`. Zero inputs are dropped.
pub fn gbgc(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<Run> {
    gbgc_until(ring, inputs, cfg, &|_| false)
}

/// [`gbgc`] that shows `stop` the live counters before every pair selection
/// and gives up with [`Error::Interrupted`] once it returns true.
pub fn gbgc_until(
    ring: &Ring,
    inputs: &[Polynomial],
    cfg: &EngineConfig,
    stop: &dyn Fn(&RunStats) -> bool,
) -> Result<Run> {
    cfg.validate()?;
    let gens: Vec<Polynomial> = inputs.iter().filter(|f| !f.is_zero()).cloned().collect();
    for f in &gens {
        if let Some(t) = f.terms().iter().find(|t| t.mono.nvars() != ring.nvars()) {
            return Err(Error::Dimension {
                expected: ring.nvars(),
                found: t.mono.nvars(),
            });
        }
    }
    let mo = cfg.module_order.build(ring, &gens)?;
    let m = gens.len();
    let mut engine = Engine {
        ctx: Context::new(ring.clone(), mo, gens),
        cfg,
        basis: Basis::new(m),
        queue: PairQueue::new(cfg.strategy, cfg.dedup),
        stats: RunStats::default(),
        monitor: AdmissibilityMonitor::new(cfg.check_admissible),
    };
    engine.run(stop)?;
    let Engine {
        ctx,
        basis,
        mut stats,
        monitor,
        ..
    } = engine;
    let groebner_basis = extract_gb(ring, &basis);
    stats.basis_nonzero = basis.nonzero().len() as u64;
    stats.reduced_gb_size = groebner_basis.len() as u64;
    stats.admissibility_checks = monitor.checks();
    stats.admissibility_violations = monitor.violations().len() as u64;
    debug_assert!(stats.is_conserved());
    Ok(Run {
        context: ctx,
        basis,
        stats,
        violations: monitor.violations().to_vec(),
        groebner_basis,
    })
}
