//! Buchberger engine for homogeneous ideals in `S = k[x,y,z]` and for graded
//! submodules of twisted free modules `S(-a_1) ⊕ … ⊕ S(-a_r)`.
//!
//! Normal forms and S-pairs are order-generic; syzygies come from Schreyer's
//! theorem (the division transcripts of S-pairs of a Gröbner basis form a
//! Gröbner basis of the syzygy module for the induced order). Ideal quotient,
//! intersection and saturation are built on syzygies of generator lists via a
//! block elimination order, so no extra polynomial variables are ever
//! introduced.

use crate::polyring::{Monomial, Poly};
use crate::scalars::{FieldElement, FieldKind, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::sync::Arc;

/// Element of a free module `F = ⊕ S(-a_i)`: one polynomial per position.
/// The ambient twist vector lives on the containing basis / resolution step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    pub components: Vec<Poly>,
}

/// A located term `c * m * e_pos` of a module element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadTerm {
    pub coef: FieldElement,
    pub mon: Monomial,
    pub pos: usize,
}

impl ModuleElement {
    pub fn zero(rank: usize) -> ModuleElement {
        ModuleElement {
            components: vec![Poly::zero(); rank],
        }
    }

    pub fn from_poly(p: Poly) -> ModuleElement {
        ModuleElement {
            components: vec![p],
        }
    }

    pub fn unit(rank: usize, pos: usize, p: Poly) -> ModuleElement {
        let mut e = ModuleElement::zero(rank);
        e.components[pos] = p;
        e
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Largest term under `order`. Within one position any of our orders
    /// restricts to grevlex, so the candidates are the component leads.
    pub fn lead(&self, order: &ModuleOrder) -> Option<LeadTerm> {
        let mut best: Option<LeadTerm> = None;
        for (pos, comp) in self.components.iter().enumerate() {
            if let Some((c, m)) = comp.lead() {
                let replace = match &best {
                    None => true,
                    Some(cur) => order.cmp((m, pos), (&cur.mon, cur.pos)) == Ordering::Greater,
                };
                if replace {
                    best = Some(LeadTerm {
                        coef: c.clone(),
                        mon: *m,
                        pos,
                    });
                }
            }
        }
        best
    }

    /// Remove and return the lead term under `order`.
    fn pop_lead(&mut self, order: &ModuleOrder) -> Option<LeadTerm> {
        let lt = self.lead(order)?;
        self.components[lt.pos] = self.components[lt.pos].sub(&Poly::term(lt.coef.clone(), lt.mon));
        Some(lt)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        ModuleElement {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(Poly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> ModuleElement {
        ModuleElement {
            components: self.components.iter().map(|p| p.mul_term(c, m)).collect(),
        }
    }

    /// `self - c * m * g`.
    pub fn sub_mul_term(&self, c: &FieldElement, m: &Monomial, g: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), g.rank(), "rank mismatch");
        ModuleElement {
            components: self
                .components
                .iter()
                .zip(&g.components)
                .map(|(a, b)| a.sub_mul_term(c, m, b))
                .collect(),
        }
    }

    /// Degree of a homogeneous element w.r.t. the ambient twists, i.e. the
    /// common value of `deg(components[i]) + twists[i]`.
    pub fn degree(&self, twists: &[i64]) -> Result<i64, GroebnerError> {
        assert_eq!(self.rank(), twists.len(), "twist vector length mismatch");
        let mut deg: Option<i64> = None;
        for (comp, a) in self.components.iter().zip(twists) {
            if comp.is_zero() {
                continue;
            }
            let d = comp
                .homogeneous_degree()
                .map_err(|_| GroebnerError::NotHomogeneous)?
                + a;
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                Some(_) => return Err(GroebnerError::NotHomogeneous),
            }
        }
        deg.ok_or(GroebnerError::ZeroElement)
    }

    pub fn field(&self) -> FieldKind {
        for comp in &self.components {
            if let FieldKind::Quadratic(d) = comp.field() {
                return FieldKind::Quadratic(d);
            }
        }
        FieldKind::Rational
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("generators must be homogeneous for the given twists")]
    NotHomogeneous,
    #[error("the zero element has no degree")]
    ZeroElement,
    #[error("saturation did not stabilize within {0} iterations")]
    SaturationDiverged(usize),
}

/// Data for a Schreyer-induced order: position `i` of the syzygy ambient maps
/// to the lead term `leads[i]` of the previous level's basis; comparison first
/// compares images in the base order, then prefers the smaller position.
#[derive(Debug)]
pub struct SchreyerLevel {
    pub leads: Vec<(Monomial, usize)>,
    pub base: ModuleOrder,
}

#[derive(Debug, Clone)]
pub enum ModuleOrder {
    /// Grevlex on monomials, ties broken by the smaller position (TOP).
    TopGrevlex,
    /// Induced by the lead terms of a basis one level down.
    Schreyer(Arc<SchreyerLevel>),
    /// Block order: positions `< split` dominate positions `>= split`; inside
    /// each block TOP-grevlex. Used to read off syzygies of generator lists.
    Elimination { split: usize },
}

impl ModuleOrder {
    pub fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self {
            ModuleOrder::TopGrevlex => a.0.cmp(b.0).then_with(|| b.1.cmp(&a.1)),
            ModuleOrder::Schreyer(level) => {
                let (ma, pa) = level.leads[a.1];
                let (mb, pb) = level.leads[b.1];
                level
                    .base
                    .cmp((&a.0.mul(&ma), pa), (&b.0.mul(&mb), pb))
                    .then_with(|| b.1.cmp(&a.1))
            }
            ModuleOrder::Elimination { split } => {
                let a_hi = a.1 < *split;
                let b_hi = b.1 < *split;
                match (a_hi, b_hi) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    _ => a.0.cmp(b.0).then_with(|| b.1.cmp(&a.1)),
                }
            }
        }
    }
}

/// A Gröbner basis of a submodule of `⊕ S(-a_i)`, together with its ambient
/// twists and the order it is a basis for.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub generators: Vec<ModuleElement>,
    pub twists: Vec<i64>,
    pub order: ModuleOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_ideal(&self) -> bool {
        self.rank() == 1
    }

    /// Degrees of the generators as elements of the twisted ambient module.
    pub fn generator_degrees(&self) -> Vec<i64> {
        self.generators
            .iter()
            .map(|g| {
                g.degree(&self.twists)
                    .expect("basis elements are homogeneous")
            })
            .collect()
    }

    pub fn lead_terms(&self) -> Vec<LeadTerm> {
        self.generators
            .iter()
            .map(|g| g.lead(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    /// Ideal generators as plain polynomials (rank-1 ambients only).
    pub fn ideal_generators(&self) -> Vec<Poly> {
        assert!(self.is_ideal(), "not a rank-1 ambient");
        self.generators
            .iter()
            .map(|g| g.components[0].clone())
            .collect()
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        normal_form(f, &self.generators, &self.order).is_zero()
    }

    pub fn contains_poly(&self, f: &Poly) -> bool {
        assert!(self.is_ideal(), "not a rank-1 ambient");
        self.contains(&ModuleElement::from_poly(f.clone()))
    }
}

/// Full division: returns the normal form and the quotients, so that
/// `f = Σ q_k g_k + remainder` and no remainder term is divisible by any lead
/// term of the basis. Deterministic: the first dividing generator wins.
pub fn divide(
    f: &ModuleElement,
    basis: &[ModuleElement],
    order: &ModuleOrder,
) -> (ModuleElement, Vec<Poly>) {
    let rank = f.rank();
    let leads: Vec<Option<LeadTerm>> = basis.iter().map(|g| g.lead(order)).collect();
    let mut work = f.clone();
    let mut rem = ModuleElement::zero(rank);
    let mut quot = vec![Poly::zero(); basis.len()];
    'outer: while let Some(lt) = work.lead(order) {
        for (k, g) in basis.iter().enumerate() {
            let Some(gl) = &leads[k] else { continue };
            if gl.pos == lt.pos && gl.mon.divides(&lt.mon) {
                let c = lt.coef.try_div(&gl.coef).expect("nonzero lead coefficient");
                let m = gl.mon.div(&lt.mon).expect("divisibility checked");
                work = work.sub_mul_term(&c, &m, g);
                quot[k] = quot[k].add(&Poly::term(c, m));
                continue 'outer;
            }
        }
        let lt = work.pop_lead(order).expect("lead exists");
        rem.components[lt.pos] = rem.components[lt.pos].add(&Poly::term(lt.coef, lt.mon));
    }
    (rem, quot)
}

pub fn normal_form(
    f: &ModuleElement,
    basis: &[ModuleElement],
    order: &ModuleOrder,
) -> ModuleElement {
    divide(f, basis, order).0
}

pub fn normal_form_poly(f: &Poly, basis: &GroebnerBasis) -> Poly {
    assert!(basis.is_ideal(), "not a rank-1 ambient");
    normal_form(
        &ModuleElement::from_poly(f.clone()),
        &basis.generators,
        &basis.order,
    )
    .components[0]
        .clone()
}

/// S-pair of two module elements, or `None` when the lead terms sit in
/// different positions (no pair is formed by definition).
pub fn s_pair(
    g1: &ModuleElement,
    g2: &ModuleElement,
    order: &ModuleOrder,
) -> Option<ModuleElement> {
    let l1 = g1.lead(order)?;
    let l2 = g2.lead(order)?;
    if l1.pos != l2.pos {
        return None;
    }
    let w = l1.mon.lcm(&l2.mon);
    let u1 = l1.mon.div(&w).expect("lcm divisible");
    let u2 = l2.mon.div(&w).expect("lcm divisible");
    let c1 = FieldElement::one().try_div(&l1.coef).expect("nonzero lead");
    let c2 = FieldElement::one().try_div(&l2.coef).expect("nonzero lead");
    Some(g1.mul_term(&c1, &u1).sub_mul_term(&c2, &u2, g2))
}

/// Canonical unit rescaling factor: over `Q` it clears to the primitive
/// integer form with positive lead (cheap gcd bookkeeping keeps Buchberger
/// coefficients small); over a quadratic field it makes the element monic.
fn primitive_scale(e: &ModuleElement, order: &ModuleOrder) -> Option<FieldElement> {
    let lead = e.lead(order)?;
    match e.field() {
        FieldKind::Rational => {
            let mut num_gcd = BigInt::zero();
            let mut den_lcm = BigInt::one();
            for comp in &e.components {
                for (c, _) in comp.terms() {
                    let r = c.as_rational().expect("rational field");
                    num_gcd = num_gcd.gcd(r.numer());
                    den_lcm = den_lcm.lcm(r.denom());
                }
            }
            if num_gcd.is_zero() {
                return None;
            }
            let mut scale = Rational::new(den_lcm, num_gcd);
            let lead_c = lead.coef.as_rational().expect("rational field");
            if (lead_c * &scale).is_negative() {
                scale = -scale;
            }
            Some(FieldElement::from_rational(scale))
        }
        FieldKind::Quadratic(_) => Some(lead.coef.inv().expect("nonzero lead")),
    }
}

fn make_monic(e: &ModuleElement, order: &ModuleOrder) -> ModuleElement {
    match e.lead(order) {
        Some(lead) if !lead.coef.is_one() => e.scale(&lead.coef.inv().expect("nonzero lead")),
        _ => e.clone(),
    }
}

/// Interreduce to the reduced basis: drop generators whose lead is divisible
/// by another's, fully tail-reduce, make monic, sort descending by lead term.
fn interreduce(mut basis: Vec<ModuleElement>, order: &ModuleOrder) -> Vec<ModuleElement> {
    basis.retain(|g| !g.is_zero());
    // drop redundant lead terms; on equal leads the later entry goes
    let mut keep: Vec<bool> = vec![true; basis.len()];
    let leads: Vec<LeadTerm> = basis
        .iter()
        .map(|g| g.lead(order).expect("nonzero"))
        .collect();
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if leads[j].pos == leads[i].pos && leads[j].mon.divides(&leads[i].mon) {
                if leads[j].mon == leads[i].mon && j > i {
                    continue; // the later duplicate will be dropped instead
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<ModuleElement> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each against the others until stable
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<ModuleElement> = kept
                .iter()
                .enumerate()
                .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                .collect();
            let reduced = normal_form(&kept[i], &others, order);
            assert!(
                !reduced.is_zero(),
                "lead-irredundant generator reduced to zero"
            );
            if reduced != kept[i] {
                kept[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut kept: Vec<ModuleElement> = kept.iter().map(|g| make_monic(g, order)).collect();
    // canonical presentation: ascending lead degree, then descending lead term
    kept.sort_by(|a, b| {
        let la = a.lead(order).expect("nonzero");
        let lb = b.lead(order).expect("nonzero");
        la.mon
            .degree()
            .cmp(&lb.mon.degree())
            .then_with(|| order.cmp((&lb.mon, lb.pos), (&la.mon, la.pos)))
    });
    kept
}

#[derive(PartialEq, Eq)]
struct QueuedPair {
    degree: i64,
    i: usize,
    j: usize,
}

impl Ord for QueuedPair {
    fn cmp(&self, other: &Self) -> Ordering {
        // BinaryHeap is a max-heap; invert for lowest-degree-first
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

impl PartialOrd for QueuedPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Gröbner basis of `span(gens)` plus, optionally, a tracking matrix writing
/// every basis element as a combination of the input generators.
struct BuchbergerRun {
    basis: Vec<ModuleElement>,
    /// `tracking[j]` has width `gens.len()`: `basis[j] = Σ_i tracking[j][i] · gens[i]`.
    tracking: Option<Vec<Vec<Poly>>>,
}

/// Buchberger's algorithm with the product criterion (ideals only) and the
/// chain criterion, normal selection strategy (lowest S-pair degree first).
fn buchberger_core(
    gens: &[ModuleElement],
    twists: &[i64],
    order: &ModuleOrder,
    track: bool,
) -> BuchbergerRun {
    let rank = twists.len();
    let mut basis: Vec<ModuleElement> = Vec::new();
    let mut tracking: Vec<Vec<Poly>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        assert_eq!(g.rank(), rank, "generator rank mismatch");
        if g.is_zero() {
            continue;
        }
        g.degree(twists).expect("generators must be homogeneous");
        let scale = primitive_scale(g, order).expect("nonzero");
        basis.push(g.scale(&scale));
        if track {
            let mut row = vec![Poly::zero(); gens.len()];
            row[i] = Poly::constant(scale);
            tracking.push(row);
        }
    }

    let mut queue: BinaryHeap<QueuedPair> = BinaryHeap::new();
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let pair_degree = |basis: &[ModuleElement], i: usize, j: usize| -> Option<i64> {
        let li = basis[i].lead(order)?;
        let lj = basis[j].lead(order)?;
        if li.pos != lj.pos {
            return None;
        }
        Some(li.mon.lcm(&lj.mon).degree() + twists[li.pos])
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if let Some(degree) = pair_degree(&basis, i, j) {
                queue.push(QueuedPair { degree, i, j });
            }
        }
    }

    while let Some(QueuedPair { i, j, .. }) = queue.pop() {
        let li = basis[i].lead(order).expect("nonzero");
        let lj = basis[j].lead(order).expect("nonzero");
        treated.insert((i, j));
        // product criterion: valid for ideals only
        if rank == 1 && li.mon.is_coprime(&lj.mon) {
            continue;
        }
        // chain criterion: some g_k divides the lcm and both sub-pairs are done
        let w = li.mon.lcm(&lj.mon);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let Some(lk) = basis[k].lead(order) else {
                return false;
            };
            lk.pos == li.pos
                && lk.mon.divides(&w)
                && treated.contains(&(i.min(k), i.max(k)))
                && treated.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let u_i = li.mon.div(&w).expect("lcm divisible");
        let u_j = lj.mon.div(&w).expect("lcm divisible");
        let c_i = FieldElement::one().try_div(&li.coef).expect("nonzero lead");
        let c_j = FieldElement::one().try_div(&lj.coef).expect("nonzero lead");
        let s = basis[i]
            .mul_term(&c_i, &u_i)
            .sub_mul_term(&c_j, &u_j, &basis[j]);
        let (nf, quot) = divide(&s, &basis, order);
        if !nf.is_zero() {
            let scale = primitive_scale(&nf, order).expect("nonzero");
            let n = basis.len();
            if track {
                // row(nf) = c_i·u_i·row_i − c_j·u_j·row_j − Σ_k q_k·row_k, rescaled
                let width = gens.len();
                let mut row = vec![Poly::zero(); width];
                for w_idx in 0..width {
                    let mut p = tracking[i][w_idx]
                        .mul_term(&c_i, &u_i)
                        .sub(&tracking[j][w_idx].mul_term(&c_j, &u_j));
                    for (k, q) in quot.iter().enumerate() {
                        if !q.is_zero() && !tracking[k][w_idx].is_zero() {
                            p = p.sub(&q.mul(&tracking[k][w_idx]));
                        }
                    }
                    row[w_idx] = p.scale(&scale);
                }
                tracking.push(row);
            }
            basis.push(nf.scale(&scale));
            for k in 0..n {
                if let Some(degree) = pair_degree(&basis, k, n) {
                    queue.push(QueuedPair { degree, i: k, j: n });
                }
            }
        }
    }

    BuchbergerRun {
        basis,
        tracking: track.then_some(tracking),
    }
}

/// Buchberger returning the fully reduced canonical basis.
pub fn buchberger(gens: Vec<ModuleElement>, twists: Vec<i64>, order: ModuleOrder) -> GroebnerBasis {
    let run = buchberger_core(&gens, &twists, &order, false);
    let generators = interreduce(run.basis, &order);
    GroebnerBasis {
        generators,
        twists,
        order,
        reduced: true,
    }
}

/// Reduced Gröbner basis of the ideal spanned by `gens` under grevlex.
pub fn ideal_groebner_basis(gens: Vec<Poly>) -> GroebnerBasis {
    buchberger(
        gens.into_iter().map(ModuleElement::from_poly).collect(),
        vec![0],
        ModuleOrder::TopGrevlex,
    )
}

/// Schreyer syzygies of a Gröbner basis: one generator per retained S-pair,
/// assembled from the division transcript. The result is a Gröbner basis of
/// the syzygy module in `⊕ S(-deg g_i)` for the Schreyer-induced order.
pub fn schreyer_syzygies(g: &GroebnerBasis) -> GroebnerBasis {
    let n = g.generators.len();
    let leads: Vec<LeadTerm> = g.lead_terms();
    for lt in &leads {
        assert!(lt.coef.is_one(), "schreyer_syzygies expects a monic basis");
    }
    let syz_twists = g.generator_degrees();
    let syz_order = ModuleOrder::Schreyer(Arc::new(SchreyerLevel {
        leads: leads.iter().map(|lt| (lt.mon, lt.pos)).collect(),
        base: g.order.clone(),
    }));

    // candidate pairs with their Schreyer lead terms (lcm/lm_i at position i)
    let mut cands: Vec<(Monomial, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if leads[i].pos != leads[j].pos {
                continue;
            }
            let w = leads[i].mon.lcm(&leads[j].mon);
            cands.push((leads[i].mon.div(&w).expect("lcm divisible"), i, j));
        }
    }
    // keep a minimal covering set of Schreyer lead terms
    let mut keep = vec![true; cands.len()];
    for a in 0..cands.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cands.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (ma, ia, _) = cands[a];
            let (mb, ib, _) = cands[b];
            if ia == ib && mb.divides(&ma) && (mb != ma || b < a) {
                keep[a] = false;
                break;
            }
        }
    }

    let mut syzygies: Vec<ModuleElement> = Vec::new();
    for (idx, &(u_i, i, j)) in cands.iter().enumerate() {
        if !keep[idx] {
            continue;
        }
        let w = leads[i].mon.lcm(&leads[j].mon);
        let u_j = leads[j].mon.div(&w).expect("lcm divisible");
        let one = FieldElement::one();
        let s = g.generators[i]
            .mul_term(&one, &u_i)
            .sub_mul_term(&one, &u_j, &g.generators[j]);
        let (rem, quot) = divide(&s, &g.generators, &g.order);
        assert!(
            rem.is_zero(),
            "S-pair of a Gröbner basis must reduce to zero"
        );
        let mut comps = quot.iter().map(Poly::neg).collect::<Vec<_>>();
        comps[i] = comps[i].add(&Poly::term(one.clone(), u_i));
        comps[j] = comps[j].sub(&Poly::term(one, u_j));
        let syz = ModuleElement { components: comps };
        debug_assert!(apply_matrix_vector(&g.generators, &syz).is_zero());
        debug_assert_eq!(
            syz.lead(&syz_order).map(|lt| (lt.mon, lt.pos)),
            Some((u_i, i)),
            "Schreyer lead term prediction"
        );
        syzygies.push(syz);
    }

    let generators = interreduce(syzygies, &syz_order);
    GroebnerBasis {
        generators,
        twists: syz_twists,
        order: syz_order,
        reduced: true,
    }
}

/// `Σ e_k · g_k` — evaluates a syzygy candidate against the basis.
pub fn apply_matrix_vector(gens: &[ModuleElement], e: &ModuleElement) -> ModuleElement {
    assert_eq!(gens.len(), e.rank());
    let rank = gens.first().map(ModuleElement::rank).unwrap_or(0);
    let mut acc = ModuleElement::zero(rank);
    for (coef, g) in e.components.iter().zip(gens) {
        for (c, m) in coef.terms() {
            acc = acc.add(&g.mul_term(c, m));
        }
    }
    acc
}

/// Generators of the syzygy module of an arbitrary list of homogeneous
/// elements (no Gröbner assumption). Runs tracked Buchberger to get a basis
/// `H = A·F` of the span, Schreyer syzygies `Z` of `H`, and the division
/// transcripts `F = B·H`; then `Syz(F) = Z·A ∪ rows(I - B·A)`.
pub fn syzygies_of_list(gens: &[ModuleElement], twists: &[i64]) -> Vec<ModuleElement> {
    let s = gens.len();
    let order = ModuleOrder::TopGrevlex;
    for g in gens {
        g.degree(twists)
            .expect("generators must be homogeneous and nonzero");
    }
    let run = buchberger_core(gens, twists, &order, true);
    let mut basis = run.basis;
    let mut tracking = run.tracking.expect("tracking requested");
    // minimal monic basis; Schreyer needs lead-irredundant monic generators
    let mut idx = 0;
    while idx < basis.len() {
        let lead = basis[idx].lead(&order).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, g)| {
            if j == idx {
                return false;
            }
            let lj = g.lead(&order).expect("nonzero");
            lj.pos == lead.pos && lj.mon.divides(&lead.mon) && (lj.mon != lead.mon || j < idx)
        });
        if redundant {
            basis.remove(idx);
            tracking.remove(idx);
        } else {
            idx += 1;
        }
    }
    for (g, row) in basis.iter_mut().zip(tracking.iter_mut()) {
        let lead = g.lead(&order).expect("nonzero");
        if !lead.coef.is_one() {
            let inv = lead.coef.inv().expect("nonzero lead");
            *g = g.scale(&inv);
            for p in row.iter_mut() {
                *p = p.scale(&inv);
            }
        }
    }
    let gb = GroebnerBasis {
        generators: basis.clone(),
        twists: twists.to_vec(),
        order: order.clone(),
        reduced: false,
    };
    let mut out: Vec<ModuleElement> = Vec::new();
    // lifted Schreyer syzygies: z ↦ z·A
    for z in schreyer_syzygies(&gb).generators {
        let mut comps = vec![Poly::zero(); s];
        for (j, zc) in z.components.iter().enumerate() {
            if zc.is_zero() {
                continue;
            }
            for (i, a) in tracking[j].iter().enumerate() {
                if !a.is_zero() {
                    comps[i] = comps[i].add(&zc.mul(a));
                }
            }
        }
        let elem = ModuleElement { components: comps };
        if !elem.is_zero() {
            out.push(elem);
        }
    }
    // rows of I - B·A, with B from dividing each input by the basis
    for (i, g) in gens.iter().enumerate() {
        let (rem, quot) = divide(g, &basis, &order);
        assert!(
            rem.is_zero(),
            "input generator must reduce to zero against its own basis"
        );
        let mut comps = vec![Poly::zero(); s];
        comps[i] = Poly::one();
        for (j, q) in quot.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (i2, a) in tracking[j].iter().enumerate() {
                if !a.is_zero() {
                    comps[i2] = comps[i2].sub(&q.mul(a));
                }
            }
        }
        let elem = ModuleElement { components: comps };
        if !elem.is_zero() {
            out.push(elem);
        }
    }
    if cfg!(debug_assertions) {
        for syz in &out {
            debug_assert!(apply_matrix_vector(gens, syz).is_zero());
        }
    }
    out
}

/// Independent route to the same syzygy module, used as a cross-check oracle:
/// Buchberger over the block module `F ⊕ ⊕_k S(-deg f_k)` on the elements
/// `f_k ⊕ ε_k` with an elimination order; basis elements with vanishing first
/// block are the syzygies.
pub fn syzygies_of_list_elimination(gens: &[ModuleElement], twists: &[i64]) -> Vec<ModuleElement> {
    let r = twists.len();
    let s = gens.len();
    let mut block_twists = twists.to_vec();
    let mut embedded = Vec::with_capacity(s);
    for (k, g) in gens.iter().enumerate() {
        assert_eq!(g.rank(), r, "generator rank mismatch");
        let d = g
            .degree(twists)
            .expect("generators must be homogeneous and nonzero");
        block_twists.push(d);
        let mut comps = g.components.clone();
        comps.extend(vec![Poly::zero(); s]);
        comps[r + k] = Poly::one();
        embedded.push(ModuleElement { components: comps });
    }
    let gb = buchberger(
        embedded,
        block_twists,
        ModuleOrder::Elimination { split: r },
    );
    let mut out = Vec::new();
    for g in gb.generators {
        if g.components[..r].iter().all(Poly::is_zero) {
            out.push(ModuleElement {
                components: g.components[r..].to_vec(),
            });
        }
    }
    out
}

/// `J : f = { g | g·f ∈ J }` for a homogeneous `f ≠ 0`, via syzygies of
/// `(f, g_1, …, g_k)`: the first coordinates of the syzygies generate it.
pub fn ideal_quotient(j: &GroebnerBasis, f: &Poly) -> GroebnerBasis {
    assert!(j.is_ideal(), "ideal quotient needs a rank-1 ambient");
    assert!(!f.is_zero(), "cannot form the quotient by zero");
    let mut list = vec![ModuleElement::from_poly(f.clone())];
    list.extend(j.generators.iter().cloned());
    let syz = syzygies_of_list(&list, &[0]);
    let gens: Vec<Poly> = syz
        .into_iter()
        .map(|s| s.components[0].clone())
        .filter(|p| !p.is_zero())
        .collect();
    ideal_groebner_basis(gens)
}

/// `J ∩ K` via syzygies of the stacked two-block module generated by
/// `(1,1)`, `(g,0)` for `g ∈ J`, `(0,h)` for `h ∈ K`.
pub fn ideal_intersection(j: &GroebnerBasis, k: &GroebnerBasis) -> GroebnerBasis {
    assert!(
        j.is_ideal() && k.is_ideal(),
        "intersection needs rank-1 ambients"
    );
    let mut list = vec![ModuleElement {
        components: vec![Poly::one(), Poly::one()],
    }];
    for g in &j.generators {
        list.push(ModuleElement {
            components: vec![g.components[0].clone(), Poly::zero()],
        });
    }
    for h in &k.generators {
        list.push(ModuleElement {
            components: vec![Poly::zero(), h.components[0].clone()],
        });
    }
    let syz = syzygies_of_list(&list, &[0, 0]);
    let gens: Vec<Poly> = syz
        .into_iter()
        .map(|s| s.components[0].clone())
        .filter(|p| !p.is_zero())
        .collect();
    ideal_groebner_basis(gens)
}

const SATURATION_LIMIT: usize = 10;

/// Saturation `J : (x,y,z)^∞` by iterating `J ← (J:x) ∩ (J:y) ∩ (J:z)` until
/// the reduced basis stabilizes. Instances here stabilize within a few steps;
/// exceeding [`SATURATION_LIMIT`] is a hard error.
pub fn saturate_irrelevant(j: &GroebnerBasis) -> Result<GroebnerBasis, GroebnerError> {
    assert!(j.is_ideal(), "saturation needs a rank-1 ambient");
    let mut current = j.clone();
    for _ in 0..SATURATION_LIMIT {
        let qx = ideal_quotient(&current, &Poly::var(crate::polyring::Var::X));
        let qy = ideal_quotient(&current, &Poly::var(crate::polyring::Var::Y));
        let qz = ideal_quotient(&current, &Poly::var(crate::polyring::Var::Z));
        let next = ideal_intersection(&ideal_intersection(&qx, &qy), &qz);
        if next.generators == current.generators {
            return Ok(current);
        }
        current = next;
    }
    Err(GroebnerError::SaturationDiverged(SATURATION_LIMIT))
}

/// `dim_k (S/J)_t` by Macaulay's principle: count the degree-`t` monomials not
/// divisible by any lead monomial of the basis.
pub fn hilbert_function(g: &GroebnerBasis, t: i64) -> i64 {
    assert!(
        g.is_ideal(),
        "Hilbert function via monomial counting needs an ideal"
    );
    assert!(t >= 0);
    let leads: Vec<Monomial> = g.lead_terms().iter().map(|lt| lt.mon).collect();
    let mut count = 0;
    for ex in 0..=t {
        for ey in 0..=(t - ex) {
            let ez = t - ex - ey;
            let m = Monomial::new(ex as u16, ey as u16, ez as u16);
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    count
}

/// `dim_k J_t` for an ideal given by its basis.
pub fn ideal_piece_dim(g: &GroebnerBasis, t: i64) -> i64 {
    (t + 2) * (t + 1) / 2 - hilbert_function(g, t)
}

/// Memo cache for reduced ideal Gröbner bases, keyed by a canonical hash of
/// the field and the rendered generator list. Kept in memory behind a mutex;
/// optionally persisted as one file per key under a directory.
#[derive(Debug)]
pub struct GbCache {
    mem: std::sync::Mutex<std::collections::HashMap<String, Vec<Poly>>>,
    disk: Option<std::path::PathBuf>,
}

impl GbCache {
    pub fn new(disk: Option<std::path::PathBuf>) -> GbCache {
        GbCache {
            mem: std::sync::Mutex::new(std::collections::HashMap::new()),
            disk,
        }
    }

    pub fn ideal_gb(&self, gens: Vec<Poly>) -> GroebnerBasis {
        let field = gens
            .iter()
            .fold(FieldKind::Rational, |acc, p| match p.field() {
                FieldKind::Quadratic(d) => FieldKind::Quadratic(d),
                FieldKind::Rational => acc,
            });
        let key = cache_key(field, &gens);
        if let Some(cached) = self.lookup(&key, field) {
            return GroebnerBasis {
                generators: cached.into_iter().map(ModuleElement::from_poly).collect(),
                twists: vec![0],
                order: ModuleOrder::TopGrevlex,
                reduced: true,
            };
        }
        let gb = ideal_groebner_basis(gens);
        self.store(&key, &gb.ideal_generators());
        gb
    }

    fn lookup(&self, key: &str, field: FieldKind) -> Option<Vec<Poly>> {
        if let Some(hit) = self.mem.lock().expect("cache lock").get(key) {
            return Some(hit.clone());
        }
        let dir = self.disk.as_ref()?;
        let text = std::fs::read_to_string(dir.join(format!("{key}.gb"))).ok()?;
        let mut polys = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            polys.push(crate::textio::parse_poly(line, field).ok()?);
        }
        self.mem
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), polys.clone());
        Some(polys)
    }

    fn store(&self, key: &str, gens: &[Poly]) {
        self.mem
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), gens.to_vec());
        if let Some(dir) = &self.disk {
            let body: String = gens.iter().map(|p| format!("{p}\n")).collect();
            // failure to persist only costs a recomputation later
            let _ = std::fs::create_dir_all(dir);
            let _ = std::fs::write(dir.join(format!("{key}.gb")), body);
        }
    }
}

fn cache_key(field: FieldKind, gens: &[Poly]) -> String {
    use sha2::{Digest, Sha256};
    let mut rendered: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
    rendered.sort();
    let mut hasher = Sha256::new();
    hasher.update(field.to_string().as_bytes());
    for r in &rendered {
        hasher.update(b"\n");
        hasher.update(r.as_bytes());
    }
    hex::encode(hasher.finalize())
}

/// Re-checks the defining property: every S-pair reduces to zero. Used by the
/// `--check` mode and the test suites.
pub fn verify_basis(g: &GroebnerBasis) -> bool {
    for i in 0..g.generators.len() {
        for j in (i + 1)..g.generators.len() {
            if let Some(s) = s_pair(&g.generators[i], &g.generators[j], &g.order) {
                if !normal_form(&s, &g.generators, &g.order).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
