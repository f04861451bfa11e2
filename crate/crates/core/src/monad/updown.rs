//! The upset and downset monads on finite posets and the distributive law
//! between them: `S |-> { T down-closed | every member of S meets T }`.
//!
//! Functor layers are materialized with [`Layer`], so a map applied "one
//! level up" is always an index table plus a closure in the codomain layer.

use rand::Rng;

use crate::error::{Error, Result};
use crate::monad::laws::{Chase, CheckConfig, LawReport, Mode};
use crate::order::{FinitePoset, Layer, MonotoneMap, StateSet};

/// `Up(f)`: image of an up-set followed by upward closure in the codomain.
pub fn up_map(f: &MonotoneMap, u: &StateSet) -> Result<StateSet> {
    if !f.domain().is_up_closed(u)? {
        return Err(Error::NotClosed {
            what: "up_map",
            requirement: "an up-closed subset of the domain",
        });
    }
    f.codomain().up_closure(&f.image(u)?)
}

/// `x |-> the principal up-set of x`.
pub fn up_unit(poset: &FinitePoset, x: usize) -> Result<StateSet> {
    poset.up_closure(&StateSet::singleton(poset.size(), x)?)
}

/// Union of an up-closed family of up-sets.
///
/// The family itself must be up-closed in the reversed-inclusion order on
/// up-sets, i.e. closed under shrinking to smaller up-sets.
pub fn up_mult(poset: &FinitePoset, family: &[StateSet]) -> Result<StateSet> {
    let layer = Layer::up(poset)?;
    let fam = family_in_layer(&layer, family, "up_mult", "a family of up-sets")?;
    if !layer.poset.is_up_closed(&fam)? {
        return Err(Error::NotClosed {
            what: "up_mult",
            requirement: "a family closed under shrinking to smaller up-sets",
        });
    }
    union_members(poset.size(), family)
}

/// `Dn(f)`: image of a down-set followed by downward closure.
pub fn dn_map(f: &MonotoneMap, d: &StateSet) -> Result<StateSet> {
    if !f.domain().is_down_closed(d)? {
        return Err(Error::NotClosed {
            what: "dn_map",
            requirement: "a down-closed subset of the domain",
        });
    }
    f.codomain().down_closure(&f.image(d)?)
}

/// `x |-> the principal down-set of x`.
pub fn dn_unit(poset: &FinitePoset, x: usize) -> Result<StateSet> {
    poset.down_closure(&StateSet::singleton(poset.size(), x)?)
}

/// Union of a down-closed family of down-sets (closed under shrinking to
/// smaller down-sets, since down-sets are ordered by inclusion).
pub fn dn_mult(poset: &FinitePoset, family: &[StateSet]) -> Result<StateSet> {
    let layer = Layer::dn(poset)?;
    let fam = family_in_layer(&layer, family, "dn_mult", "a family of down-sets")?;
    if !layer.poset.is_down_closed(&fam)? {
        return Err(Error::NotClosed {
            what: "dn_mult",
            requirement: "a family closed under shrinking to smaller down-sets",
        });
    }
    union_members(poset.size(), family)
}

fn union_members(size: usize, family: &[StateSet]) -> Result<StateSet> {
    let mut out = StateSet::empty(size)?;
    for s in family {
        if s.carrier() != size {
            return Err(Error::CarrierMismatch {
                expected: size,
                got: s.carrier(),
            });
        }
        out = out.union(s);
    }
    Ok(out)
}

/// Encodes a family of layer elements as a subset of the layer carrier.
fn family_in_layer(
    layer: &Layer,
    family: &[StateSet],
    what: &'static str,
    requirement: &'static str,
) -> Result<StateSet> {
    let mut fam = StateSet::empty(layer.len())?;
    for s in family {
        match layer.index_of(s) {
            Some(i) => fam = fam.with(i),
            None => return Err(Error::NotClosed { what, requirement }),
        }
    }
    Ok(fam)
}

/// Image of a layer-carrier subset through an index table, followed by a
/// closure in the codomain poset. This is `Up(g)` / `Dn(g)` applied to one
/// element, for `g` given as a table between layer carriers.
pub(crate) fn image_then_close(
    table: &[usize],
    codomain: &FinitePoset,
    p: &StateSet,
    upward: bool,
) -> Result<StateSet> {
    if p.carrier() != table.len() {
        return Err(Error::CarrierMismatch {
            expected: table.len(),
            got: p.carrier(),
        });
    }
    let mut img = StateSet::empty(codomain.size())?;
    for i in p.iter() {
        img = img.with(table[i]);
    }
    if upward {
        codomain.up_closure(&img)
    } else {
        codomain.down_closure(&img)
    }
}

/// Both functor layers over one base poset, with the distributive law
/// between them.
pub(crate) struct DistCtx {
    pub up: Layer,
    pub dn: Layer,
}

impl DistCtx {
    pub fn new(base: &FinitePoset) -> Result<Self> {
        Ok(DistCtx {
            up: Layer::up(base)?,
            dn: Layer::dn(base)?,
        })
    }

    /// The distributive law on encoded elements: a family of up-sets (as a
    /// subset of the up-layer) goes to the family of down-sets meeting every
    /// member (as a subset of the down-layer).
    pub fn dist(&self, s: &StateSet) -> Result<StateSet> {
        if s.carrier() != self.up.len() {
            return Err(Error::CarrierMismatch {
                expected: self.up.len(),
                got: s.carrier(),
            });
        }
        let mut out = StateSet::empty(self.dn.len())?;
        for (j, t) in self.dn.elems.iter().enumerate() {
            if s.iter().all(|i| !self.up.elems[i].inter(t).is_empty()) {
                out = out.with(j);
            }
        }
        Ok(out)
    }
}

/// The distributive law on explicit families: takes a down-closed family of
/// up-sets of `poset` and returns, in ascending mask order, every down-set
/// that meets all of its members.
pub fn dist_dn_up(poset: &FinitePoset, family: &[StateSet]) -> Result<Vec<StateSet>> {
    let ctx = DistCtx::new(poset)?;
    let fam = family_in_layer(&ctx.up, family, "dist_dn_up", "a family of up-sets")?;
    if !ctx.up.poset.is_down_closed(&fam)? {
        return Err(Error::NotClosed {
            what: "dist_dn_up",
            requirement: "a family closed under enlarging its up-sets",
        });
    }
    let out = ctx.dist(&fam)?;
    Ok(out.iter().map(|j| ctx.dn.elems[j]).collect())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Up,
    Dn,
}

impl Dir {
    fn name(self) -> &'static str {
        match self {
            Dir::Up => "up",
            Dir::Dn => "dn",
        }
    }

    fn layer(self, base: &FinitePoset) -> Result<Layer> {
        match self {
            Dir::Up => Layer::up(base),
            Dir::Dn => Layer::dn(base),
        }
    }

    fn close(self, poset: &FinitePoset, p: &StateSet) -> Result<StateSet> {
        match self {
            Dir::Up => poset.up_closure(p),
            Dir::Dn => poset.down_closure(p),
        }
    }

    fn enumerate_closed(self, poset: &FinitePoset) -> Result<Vec<StateSet>> {
        match self {
            Dir::Up => poset.enumerate_up_sets(),
            Dir::Dn => poset.enumerate_down_sets(),
        }
    }

    fn unit_table(self, base: &FinitePoset, layer: &Layer) -> Result<Vec<usize>> {
        (0..base.size())
            .map(|x| {
                let principal = self.close(base, &StateSet::singleton(base.size(), x)?)?;
                layer.index_of(&principal).ok_or(Error::Invalid(
                    "principal closed set missing from layer".to_string(),
                ))
            })
            .collect()
    }
}

/// Monad laws for the up-set monad over one poset. `label` names the poset
/// in the report lines.
pub fn check_up_monad_laws(
    label: &str,
    poset: &FinitePoset,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    check_order_monad_laws(Dir::Up, label, poset, cfg)
}

/// Monad laws for the down-set monad over one poset.
pub fn check_dn_monad_laws(
    label: &str,
    poset: &FinitePoset,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    check_order_monad_laws(Dir::Dn, label, poset, cfg)
}

fn check_order_monad_laws(
    dir: Dir,
    label: &str,
    poset: &FinitePoset,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    let l1 = dir.layer(poset)?;
    let mut reports = Vec::new();

    let mult_at = |mask: &StateSet| -> Result<StateSet> {
        union_members(poset.size(), &mask.iter().map(|i| l1.elems[i]).collect::<Vec<_>>())
    };

    // unit . mult, with the unit at the layer level: eta_{T P}.
    let mut chase = Chase::new(format!("{}.unit-left.{label}", dir.name()));
    for (i, u) in l1.elems.iter().enumerate() {
        let fam = dir.close(&l1.poset, &StateSet::singleton(l1.len(), i)?)?;
        let lhs = mult_at(&fam)?;
        chase.case(u, &lhs, u);
    }
    reports.push(chase.report(Mode::Exhaustive));

    // mult . T(eta_P) = id.
    let mut chase = Chase::new(format!("{}.unit-right.{label}", dir.name()));
    let unit_table = dir.unit_table(poset, &l1)?;
    for u in &l1.elems {
        let fam = image_then_close(&unit_table, &l1.poset, u, dir == Dir::Up)?;
        let lhs = mult_at(&fam)?;
        chase.case(u, &lhs, u);
    }
    reports.push(chase.report(Mode::Exhaustive));

    // Associativity over the second layer.
    let l2 = dir.layer(&l1.poset)?;
    let mut mult_table = Vec::with_capacity(l2.len());
    for fam in &l2.elems {
        let m = mult_at(fam)?;
        mult_table.push(l1.index_of(&m).ok_or(Error::Invalid(
            "union of closed sets missing from layer".to_string(),
        ))?);
    }
    let mut chase = Chase::new(format!("{}.assoc.{label}", dir.name()));
    let run = |w: &StateSet, chase: &mut Chase| -> Result<()> {
        // T(mult) then mult.
        let lowered = image_then_close(&mult_table, &l1.poset, w, dir == Dir::Up)?;
        let lhs = mult_at(&lowered)?;
        // mult at the layer level (union of second-layer families) then mult.
        let mut mid = StateSet::empty(l1.len())?;
        for j in w.iter() {
            mid = mid.union(&l2.elems[j]);
        }
        let rhs = mult_at(&mid)?;
        chase.case(w, &lhs, &rhs);
        Ok(())
    };
    let inputs = if cfg.force_sample {
        None
    } else {
        match dir.enumerate_closed(&l2.poset) {
            Ok(v) if v.len() <= cfg.enumeration_cap => Some(v),
            Ok(_) => None,
            Err(Error::Capacity { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    match inputs {
        Some(ws) => {
            for w in &ws {
                run(w, &mut chase)?;
            }
            reports.push(chase.report(Mode::Exhaustive));
        }
        None => {
            let mut rng = cfg.rng();
            for _ in 0..cfg.sample_count {
                let bits = rng.gen::<u64>()
                    & if l2.len() == 64 { u64::MAX } else { (1u64 << l2.len()) - 1 };
                let w = dir.close(&l2.poset, &StateSet::from_bits(l2.len(), bits)?)?;
                run(&w, &mut chase)?;
            }
            reports.push(chase.report(Mode::Sampled { seed: cfg.seed }));
        }
    }

    Ok(reports)
}

/// Checks the four coherence diagrams of the distributive law over one
/// poset: two unit triangles and two multiplication rectangles.
pub fn check_dist_law(
    label: &str,
    poset: &FinitePoset,
    cfg: &CheckConfig,
) -> Result<Vec<LawReport>> {
    let ctx = DistCtx::new(poset)?;
    let ctx_up = DistCtx::new(&ctx.up.poset)?; // layers over Up(P)
    let ctx_dn = DistCtx::new(&ctx.dn.poset)?; // layers over Dn(P)
    let mut reports = Vec::new();

    // dist . eta^Dn_{Up P} = Up(eta^Dn_P).
    let mut chase = Chase::new(format!("distlaw.unit-dn.{label}"));
    let eta_dn_table = Dir::Dn.unit_table(poset, &ctx.dn)?;
    for (i, u) in ctx.up.elems.iter().enumerate() {
        let lhs = ctx.dist(
            &ctx.up
                .poset
                .down_closure(&StateSet::singleton(ctx.up.len(), i)?)?,
        )?;
        let rhs = image_then_close(&eta_dn_table, &ctx.dn.poset, u, true)?;
        chase.case(u, &lhs, &rhs);
    }
    reports.push(chase.report(Mode::Exhaustive));

    // dist . Dn(eta^Up_P) = eta^Up_{Dn P}.
    let mut chase = Chase::new(format!("distlaw.unit-up.{label}"));
    let eta_up_table = Dir::Up.unit_table(poset, &ctx.up)?;
    for (j, d) in ctx.dn.elems.iter().enumerate() {
        let fam = image_then_close(&eta_up_table, &ctx.up.poset, d, false)?;
        let lhs = ctx.dist(&fam)?;
        let rhs = ctx
            .dn
            .poset
            .up_closure(&StateSet::singleton(ctx.dn.len(), j)?)?;
        chase.case(d, &lhs, &rhs);
    }
    reports.push(chase.report(Mode::Exhaustive));

    // dist as an index table Dn(Up P) -> Up(Dn P), for the rectangles.
    let mut dist_table = Vec::with_capacity(ctx_up.dn.len());
    for fam in &ctx_up.dn.elems {
        let image = ctx.dist(fam)?;
        dist_table.push(ctx_dn.up.index_of(&image).ok_or(Error::Invalid(
            "distributive-law image missing from layer".to_string(),
        ))?);
    }
    let mult_dn_table = mult_table_for(&ctx.dn, &ctx_dn.dn)?;
    let mult_up_table = mult_table_for(&ctx.up, &ctx_up.up)?;

    // dist . mu^Dn_{Up P} = Up(mu^Dn_P) . dist . Dn(dist).
    let mut chase = Chase::new(format!("distlaw.mult-dn.{label}"));
    let mut run = |s: &StateSet, chase: &mut Chase| -> Result<()> {
        let mut flat = StateSet::empty(ctx.up.len())?;
        for i in s.iter() {
            flat = flat.union(&ctx_up.dn.elems[i]);
        }
        let lhs = ctx.dist(&flat)?;
        let step1 = image_then_close(&dist_table, &ctx_dn.up.poset, s, false)?;
        let step2 = ctx_dn.dist(&step1)?;
        let rhs = image_then_close(&mult_dn_table, &ctx.dn.poset, &step2, true)?;
        chase.case(s, &lhs, &rhs);
        Ok(())
    };
    run_rect(&mut chase, Dir::Dn, &ctx_up.dn.poset, cfg, &mut run)?;
    reports.push(finish_rect(chase, Dir::Dn, &ctx_up.dn.poset, cfg));

    // dist . Dn(mu^Up_P) = mu^Up_{Dn P} . Up(dist) . dist.
    let mut chase = Chase::new(format!("distlaw.mult-up.{label}"));
    let mut run = |s: &StateSet, chase: &mut Chase| -> Result<()> {
        let lowered = image_then_close(&mult_up_table, &ctx.up.poset, s, false)?;
        let lhs = ctx.dist(&lowered)?;
        let step1 = ctx_up.dist(s)?;
        let step2 = image_then_close(&dist_table, &ctx_dn.up.poset, &step1, true)?;
        let mut rhs = StateSet::empty(ctx.dn.len())?;
        for k in step2.iter() {
            rhs = rhs.union(&ctx_dn.up.elems[k]);
        }
        chase.case(s, &lhs, &rhs);
        Ok(())
    };
    run_rect(&mut chase, Dir::Dn, &ctx_up.up.poset, cfg, &mut run)?;
    reports.push(finish_rect(chase, Dir::Dn, &ctx_up.up.poset, cfg));

    Ok(reports)
}

/// Table of the union map from a second layer down to the first.
fn mult_table_for(l1: &Layer, l2: &Layer) -> Result<Vec<usize>> {
    let mut table = Vec::with_capacity(l2.len());
    for fam in &l2.elems {
        let mut m = StateSet::empty(l1.base_size)?;
        for i in fam.iter() {
            m = m.union(&l1.elems[i]);
        }
        table.push(l1.index_of(&m).ok_or(Error::Invalid(
            "union of closed sets missing from layer".to_string(),
        ))?);
    }
    Ok(table)
}

fn run_rect(
    chase: &mut Chase,
    input_dir: Dir,
    input_poset: &FinitePoset,
    cfg: &CheckConfig,
    run: &mut dyn FnMut(&StateSet, &mut Chase) -> Result<()>,
) -> Result<()> {
    if rect_exhaustive(input_dir, input_poset, cfg) {
        for s in input_dir.enumerate_closed(input_poset)? {
            run(&s, chase)?;
        }
    } else {
        let mut rng = cfg.rng();
        let n = input_poset.size();
        for _ in 0..cfg.sample_count {
            let bits = rng.gen::<u64>() & if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let s = input_dir.close(input_poset, &StateSet::from_bits(n, bits)?)?;
            run(&s, chase)?;
        }
    }
    Ok(())
}

fn rect_exhaustive(input_dir: Dir, input_poset: &FinitePoset, cfg: &CheckConfig) -> bool {
    !cfg.force_sample
        && matches!(input_dir.enumerate_closed(input_poset),
                    Ok(v) if v.len() <= cfg.enumeration_cap)
}

fn finish_rect(chase: Chase, input_dir: Dir, input_poset: &FinitePoset, cfg: &CheckConfig) -> LawReport {
    let mode = if rect_exhaustive(input_dir, input_poset, cfg) {
        Mode::Exhaustive
    } else {
        Mode::Sampled { seed: cfg.seed }
    };
    chase.report(mode)
}

/// Naturality of the distributive law in a monotone map: lifting `f`
/// through `Dn . Up` then distributing equals distributing then lifting
/// through `Up . Dn`.
pub fn check_dist_naturality(label: &str, f: &MonotoneMap) -> Result<LawReport> {
    let ctx_a = DistCtx::new(f.domain())?;
    let ctx_b = DistCtx::new(f.codomain())?;

    let mut up_f = Vec::with_capacity(ctx_a.up.len());
    for u in &ctx_a.up.elems {
        let img = f.codomain().up_closure(&f.image(u)?)?;
        up_f.push(ctx_b.up.index_of(&img).ok_or(Error::Invalid(
            "up-set image missing from layer".to_string(),
        ))?);
    }
    let mut dn_f = Vec::with_capacity(ctx_a.dn.len());
    for d in &ctx_a.dn.elems {
        let img = f.codomain().down_closure(&f.image(d)?)?;
        dn_f.push(ctx_b.dn.index_of(&img).ok_or(Error::Invalid(
            "down-set image missing from layer".to_string(),
        ))?);
    }

    let mut chase = Chase::new(format!("distlaw.naturality.{label}"));
    for s in ctx_a.up.poset.enumerate_down_sets()? {
        let lifted = image_then_close(&up_f, &ctx_b.up.poset, &s, false)?;
        let lhs = ctx_b.dist(&lifted)?;
        let rhs = image_then_close(&dn_f, &ctx_b.dn.poset, &ctx_a.dist(&s)?, true)?;
        chase.case(&s, &lhs, &rhs);
    }
    Ok(chase.report(Mode::Exhaustive))
}
