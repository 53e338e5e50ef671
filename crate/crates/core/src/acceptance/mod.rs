//! The acceptance suite: twelve criteria, each a list of instance checks.
//!
//! `Tier::Quick` keeps to graphs of at most [`QUICK_MAX_VERTICES`] vertices;
//! `Tier::Full` adds the 2662-vertex instances and a few larger extras.

mod oracle;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub use oracle::{SmallGraph, SmallGraphs};

use crate::construct::{
    bicayley, canonical_cover_subgroup, family, ConstructError, Family, FamilyInstance, Params, SourceGroup,
};
use crate::covers::{cover_kernels, verify_regular_cover, verify_symmetric_cover, FibreGroup};
use crate::graph::Graph;
use crate::groups::{AbelianGroup, FiniteGroup};
use crate::modarith::{factorize, multiplicative_order, poly_roots, solve_eq1, ModPoly};
use crate::symmetry::{
    automorphism_group, bicayley_f, isomorphism_report, stabilizer_report, AutResult, DEFAULT_NODE_BUDGET,
};

pub const QUICK_MAX_VERTICES: usize = 600;
/// Largest CGD instance enumerated for the cycle and relation checks in full mode.
pub const FULL_MAX_VERTICES: usize = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Quick,
    Full,
}

impl Tier {
    fn max_vertices(self) -> usize {
        match self {
            Tier::Quick => QUICK_MAX_VERTICES,
            Tier::Full => FULL_MAX_VERTICES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Every check of the criterion belongs to the full tier.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// One instance check inside a criterion.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub instance: String,
    pub ok: bool,
    pub note: String,
    pub seconds: f64,
    pub within_limit: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub status: Status,
    /// Wall-clock limit for each check.
    pub limit_seconds: f64,
    pub checks: Vec<Check>,
    pub skipped: Vec<String>,
    pub seconds: f64,
}

impl Outcome {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok || !c.within_limit)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.checks.iter().filter(|c| c.ok && c.within_limit).count();
        write!(
            f,
            "{} {:>2} {:<20} {:>3}/{:<3} {:>8.2}s",
            self.status,
            self.id,
            self.name,
            passed,
            self.checks.len(),
            self.seconds
        )?;
        if !self.skipped.is_empty() {
            write!(f, "  ({} full-tier checks skipped)", self.skipped.len())?;
        }
        for c in self.failures() {
            let why = if c.ok { format!("over the {:.0}s limit", self.limit_seconds) } else { c.note.clone() };
            write!(f, "\n     {}: {why}", c.instance)?;
        }
        Ok(())
    }
}

/// `(id, name, per-check limit in seconds)`.
pub const CRITERIA: [(u32, &str, f64); 12] = [
    (1, "quartic-roots", 1.0),
    (2, "aut-orders", 30.0),
    (3, "cgd-2662", 600.0),
    (4, "cgd-non-isomorphic", 600.0),
    (5, "cyclic-quotients", 60.0),
    (6, "k6-covers", 60.0),
    (7, "bicayley-form", 10.0),
    (8, "bicayley-f", 60.0),
    (9, "stabilizers", 60.0),
    (10, "six-cycles", 1.0),
    (11, "bicayley-relations", 1.0),
    (12, "brute-force-oracle", 120.0),
];

/// A check to run: instance label, whether it belongs to the full tier only,
/// and the work itself, returning `(ok, note)`.
struct Job {
    instance: String,
    full_only: bool,
    run: Box<dyn FnOnce() -> Result<(bool, String), String>>,
}

fn job(instance: impl Into<String>, full_only: bool, run: impl FnOnce() -> Result<(bool, String), String> + 'static) -> Job {
    Job { instance: instance.into(), full_only, run: Box::new(run) }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn build(f: Family, m: u64, p: u64, e: u32) -> Result<FamilyInstance, String> {
    family(f, Params { m, p, e }).map_err(err)
}

fn vertices_of(f: Family, m: u64, p: u64, e: u32) -> usize {
    match f {
        Family::Cd => 2 * m as usize,
        _ if f.cgd_index().is_some() => 2 * (m * p.pow(e + 1)) as usize,
        _ => 0,
    }
}

pub fn run(tier: Tier) -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, ..)| run_criterion(id, tier)).collect()
}

/// Runs one criterion; unknown ids give a failing outcome with no checks.
pub fn run_criterion(id: u32, tier: Tier) -> Outcome {
    let (_, name, limit) = CRITERIA.iter().copied().find(|c| c.0 == id).unwrap_or((id, "unknown", 0.0));
    let jobs = match id {
        1 => quartic_roots(),
        2 => aut_orders(),
        3 => cgd_2662(),
        4 => cgd_non_isomorphic(),
        5 => cyclic_quotients(),
        6 => k6_covers(),
        7 => bicayley_form(),
        8 => bicayley_f_orders(),
        9 => stabilizers(),
        10 => six_cycles(tier),
        11 => bicayley_relations(tier),
        12 => brute_force_oracle(),
        _ => Vec::new(),
    };
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for j in jobs {
        if j.full_only && tier == Tier::Quick {
            skipped.push(j.instance);
            continue;
        }
        let t = Instant::now();
        let (ok, note) = (j.run)().unwrap_or_else(|e| (false, format!("error: {e}")));
        let seconds = t.elapsed().as_secs_f64();
        checks.push(Check { instance: j.instance, ok, note, seconds, within_limit: seconds < limit });
    }
    let status = if checks.is_empty() && !skipped.is_empty() {
        Status::Skipped
    } else if !checks.is_empty() && checks.iter().all(|c| c.ok && c.within_limit) {
        Status::Pass
    } else {
        Status::Fail
    };
    Outcome { id, name, status, limit_seconds: limit, checks, skipped, seconds: start.elapsed().as_secs_f64() }
}

pub fn format_table(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&o.to_string());
        out.push('\n');
    }
    let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    out.push_str(&format!("{passed} passed, {failed} failed, {} skipped\n", outcomes.len() - passed - failed));
    out
}

fn quartic_roots() -> Vec<Job> {
    vec![job("m <= 200", false, || {
        let mut bad = Vec::new();
        for m in 1..=200u64 {
            let shape = factorize(m).iter().all(|&(q, e)| (q == 5 && e == 1) || q % 5 == 1);
            let raw = poly_roots(&ModPoly::cyclotomic5(m).map_err(err)?).map_err(err)?;
            let solved = solve_eq1(m).map_err(err)?;
            let orders_ok = m <= 5 || raw.iter().all(|r| multiplicative_order(r.value(), m) == Some(5));
            if raw.is_empty() == shape || raw != solved || !orders_ok {
                bad.push(m);
            }
        }
        Ok((bad.is_empty(), if bad.is_empty() { String::new() } else { format!("mismatch at m = {bad:?}") }))
    })]
}

fn aut_order_job(f: Family, m: u64, p: u64, e: u32, expected: u128) -> Job {
    let label = build(f, m, p, e).map(|i| i.label()).unwrap_or_else(|_| f.to_string());
    job(label, false, move || {
        let inst = build(f, m, p, e)?;
        let order = automorphism_group(&inst.graph).map_err(err)?.order;
        Ok((order == expected, format!("order {order}, expected {expected}")))
    })
}

fn aut_orders() -> Vec<Job> {
    [
        (Family::K6, 0, 0, 0, 720),
        (Family::K55, 0, 0, 0, 28800),
        (Family::K66Minus6K2, 0, 0, 0, 1440),
        (Family::Icosahedron, 0, 0, 0, 120),
        (Family::Cd, 11, 0, 0, 1320),
        (Family::Cd, 31, 0, 0, 310),
        (Family::Cgd125, 0, 0, 0, 30000),
        (Family::I12Double, 0, 0, 0, 480),
        (Family::G48, 0, 0, 0, 960),
        (Family::G60, 0, 0, 0, 600),
        (Family::G120, 0, 0, 0, 1200),
        (Family::Cgd4, 1, 5, 1, 4000),
        (Family::Cgd4, 1, 11, 1, 2420),
        (Family::Cgd5, 1, 11, 1, 1210),
    ]
    .into_iter()
    .map(|(f, m, p, e, order)| aut_order_job(f, m, p, e, order))
    .collect()
}

fn cgd_2662() -> Vec<Job> {
    [Family::Cgd1, Family::Cgd2, Family::Cgd3]
        .into_iter()
        .map(|f| {
            job(format!("{f}(m=1, p=11, e=2)"), true, move || {
                let inst = build(f, 1, 11, 2)?;
                let aut = automorphism_group(&inst.graph).map_err(err)?;
                let r = stabilizer_report(&inst.graph, &aut).map_err(err)?;
                let label = r.label.as_deref().unwrap_or("?");
                let ok = aut.order == 13310 && label == "Z5" && r.s == Some(1);
                Ok((ok, format!("order {}, stabilizer {label}, s = {:?}", aut.order, r.s)))
            })
        })
        .collect()
}

fn cgd_non_isomorphic() -> Vec<Job> {
    let pairs = [(Family::Cgd1, Family::Cgd2), (Family::Cgd1, Family::Cgd3), (Family::Cgd2, Family::Cgd3)];
    pairs
        .into_iter()
        .map(|(a, b)| {
            job(format!("{a} vs {b} at (1, 11, 2)"), true, move || {
                let (x, y) = (build(a, 1, 11, 2)?, build(b, 1, 11, 2)?);
                let r = isomorphism_report(&x.graph, &y.graph, DEFAULT_NODE_BUDGET).map_err(err)?;
                let note = format!(
                    "{} after {} search nodes{}",
                    if r.isomorphic { "isomorphic" } else { "not isomorphic" },
                    r.nodes,
                    if r.screen_separated { ", invariant screen also separates" } else { "" }
                );
                Ok((!r.isomorphic, note))
            })
        })
        .collect()
}

fn cyclic_quotients() -> Vec<Job> {
    [
        (Family::Cgd1, 1, 11, 2),
        (Family::Cgd2, 1, 11, 2),
        (Family::Cgd3, 1, 11, 2),
        (Family::Cgd4, 1, 5, 1),
        (Family::Cgd4, 1, 11, 1),
        (Family::Cgd5, 1, 11, 1),
    ]
    .into_iter()
    .map(|(f, m, p, e)| {
        let full = vertices_of(f, m, p, e) > QUICK_MAX_VERTICES;
        job(format!("{f}(m={m}, p={p}, e={e})"), full, move || {
            let inst = build(f, m, p, e)?;
            let n = canonical_cover_subgroup(&inst).map_err(err)?;
            let (base, base_name) = if p == 5 {
                (Graph::complete_bipartite(5, 5), "K_{5,5}".to_string())
            } else {
                (build(Family::Cd, p, 0, 0)?.graph, format!("CD_{p}"))
            };
            let r = verify_regular_cover(&inst.graph, &n.group, &base).map_err(err)?;
            let ok = r.checks_passed && n.order == m * p.pow(e) && r.quotient_order == 2 * p as usize;
            Ok((ok, format!("N = <{}> of order {}, quotient of order {} ~ {base_name}: {}", n.description, n.order, r.quotient_order, r.iso_to_base)))
        })
    })
    .collect()
}

fn k6_covers() -> Vec<Job> {
    [(Family::I12Double, "D2"), (Family::G48, "D3"), (Family::G60, "D5"), (Family::G120, "D10")]
        .into_iter()
        .map(|(f, stated)| {
            job(format!("{f} as a {stated}-cover of K_6"), false, move || {
                let inst = build(f, 0, 0, 0)?;
                let aut = automorphism_group(&inst.graph).map_err(err)?;
                k6_cover_check(&inst, &aut, stated)
            })
        })
        .collect()
}

/// Passes when some normal semiregular subgroup of the stated type has
/// quotient `K_6` and an arc-transitive normalizer. The note lists every
/// kernel of order `|V|/6` that gives a symmetric cover of `K_6`.
fn k6_cover_check(inst: &FamilyInstance, aut: &AutResult, stated: &str) -> Result<(bool, String), String> {
    let g = &inst.graph;
    let k6 = Graph::complete(6);
    let fibre = g.vertex_count() / 6;
    let mut found = Vec::new();
    let mut ok = false;
    for k in cover_kernels(g, aut, fibre).map_err(err)? {
        if !k.normal_in_aut {
            continue;
        }
        let r = verify_symmetric_cover(g, &k.group, &k6, FibreGroup::Enumerate(aut)).map_err(err)?;
        if r.checks_passed {
            let label = k.label.unwrap_or("unidentified");
            ok |= label == stated && k.is_dihedral();
            found.push(label);
        }
    }
    let note = if found.is_empty() {
        format!("no normal kernel of order {fibre} gives a symmetric cover of K_6")
    } else {
        format!("normal kernels of order {fibre} with quotient K_6 and arc-transitive fibre group: {}", found.join(", "))
    };
    Ok((ok, note))
}

fn bicayley_form() -> Vec<Job> {
    let mut jobs: Vec<Job> = [(Family::Cgd4, 1, 5), (Family::Cgd4, 1, 11), (Family::Cgd5, 1, 11)]
        .into_iter()
        .map(|(f, m, p)| {
            job(format!("{f}(m={m}, p={p})"), false, move || {
                let inst = build(f, m, p, 1)?;
                let (h, s) = inst.bicayley_set().ok_or("no bi-Cayley form")?;
                let bi = bicayley(&h, &[], &[], &s).map_err(err)?;
                let r = isomorphism_report(&bi, &inst.graph, DEFAULT_NODE_BUDGET).map_err(err)?;
                Ok((r.isomorphic, format!("isomorphic: {}", r.isomorphic)))
            })
        })
        .collect();
    jobs.push(job("BiCay(Z_5, {}, {}, Z_5) vs K_{5,5}", false, || {
        let z5 = AbelianGroup::cyclic(5);
        let s: Vec<Vec<u64>> = (0..5).map(|k| vec![k]).collect();
        let bi = bicayley(&z5, &[], &[], &s).map_err(err)?;
        let r = isomorphism_report(&bi, &Graph::complete_bipartite(5, 5), DEFAULT_NODE_BUDGET).map_err(err)?;
        Ok((r.isomorphic, format!("isomorphic: {}", r.isomorphic)))
    }));
    jobs
}

fn bicayley_f_orders() -> Vec<Job> {
    [
        (Family::Cgd1, 1, 11, 2, 5),
        (Family::Cgd2, 1, 11, 2, 5),
        (Family::Cgd3, 1, 11, 2, 5),
        (Family::Cgd5, 1, 11, 1, 5),
        (Family::Cgd4, 1, 11, 1, 10),
        (Family::Cgd4, 1, 5, 1, 20),
    ]
    .into_iter()
    .map(|(f, m, p, e, expected)| {
        job(format!("{f}(m={m}, p={p}, e={e})"), vertices_of(f, m, p, e) > QUICK_MAX_VERTICES, move || {
            let inst = build(f, m, p, e)?;
            let (h, s) = inst.bicayley_set().ok_or("no bi-Cayley form")?;
            let r = bicayley_f(&h, &s).map_err(err)?;
            Ok((r.f_order == expected, format!("|F| = {}, expected {expected}", r.f_order)))
        })
    })
    .collect()
}

fn stabilizers() -> Vec<Job> {
    let cases = [
        (Family::Cgd1, 1, 11, 2, "Z5"),
        (Family::Cgd2, 1, 11, 2, "Z5"),
        (Family::Cgd3, 1, 11, 2, "Z5"),
        (Family::Cgd5, 1, 11, 1, "Z5"),
        (Family::Cgd5, 1, 31, 1, "Z5"),
        (Family::Cd, 31, 0, 0, "Z5"),
        (Family::Cd, 41, 0, 0, "Z5"),
        (Family::Cd, 55, 0, 0, "Z5"),
        (Family::Cd, 61, 0, 0, "Z5"),
        (Family::G60, 0, 0, 0, "D5"),
        (Family::G120, 0, 0, 0, "D5"),
        (Family::Cgd4, 1, 11, 1, "D5"),
        (Family::Cgd4, 1, 19, 1, "D5"),
        (Family::Cgd4, 5, 11, 1, "D5"),
        (Family::I12Double, 0, 0, 0, "F20"),
        (Family::G48, 0, 0, 0, "F20"),
    ];
    cases
        .into_iter()
        .map(|(f, m, p, e, expected)| {
            let label = build(f, m, p, e).map(|i| i.label()).unwrap_or_else(|_| f.to_string());
            job(label, vertices_of(f, m, p, e) > QUICK_MAX_VERTICES, move || {
                let inst = build(f, m, p, e)?;
                let aut = automorphism_group(&inst.graph).map_err(err)?;
                let r = stabilizer_report(&inst.graph, &aut).map_err(err)?;
                let label = r.label.clone().unwrap_or_else(|| format!("unidentified of order {}", r.order));
                Ok((label == expected, format!("{label}, expected {expected}")))
            })
        })
        .collect()
}

/// Every `CGD` instance with `m` in `{1, 5, 11, 31}`, `p < 100` and at most
/// `max_vertices` vertices that satisfies its side conditions.
pub fn cgd_instances(max_vertices: usize) -> Vec<(Family, Params)> {
    let primes = (5..100u64).filter(|&p| crate::modarith::is_prime(p));
    let mut out = Vec::new();
    for p in primes {
        for f in [Family::Cgd1, Family::Cgd2, Family::Cgd3, Family::Cgd4, Family::Cgd5] {
            let es: &[u32] = if f.uses_e() { &[2, 3] } else { &[1] };
            for m in [1, 5, 11, 31] {
                for &e in es {
                    if vertices_of(f, m, p, e) > max_vertices {
                        continue;
                    }
                    let params = Params { m, p, e };
                    match family(f, params) {
                        Ok(_) => out.push((f, params)),
                        Err(ConstructError::SideCondition { .. }) => {}
                        Err(e) => panic!("{f} {params:?}: {e}"),
                    }
                }
            }
        }
    }
    out
}

fn cgd_jobs(tier: Tier, check: fn(&FamilyInstance) -> Result<(bool, String), String>) -> Vec<Job> {
    cgd_instances(tier.max_vertices())
        .into_iter()
        .map(|(f, params)| {
            let Params { m, p, e } = params;
            let label = build(f, m, p, e).map(|i| i.label()).unwrap_or_default();
            job(label, vertices_of(f, m, p, e) > QUICK_MAX_VERTICES, move || check(&build(f, m, p, e)?))
        })
        .collect()
}

/// The explicit 6-cycle through `1`, `h` and `hab`.
pub fn six_cycle(inst: &FamilyInstance) -> Option<Vec<usize>> {
    let SourceGroup::Dihedral { group, .. } = &inst.source else {
        return None;
    };
    let index = inst.family.cgd_index()?;
    let r = inst.r? as i128;
    let l = inst.lambda? as i128;
    let rank = |x| group.rank(&x);
    let cycle = if index <= 3 {
        vec![
            rank(group.rotation(&[0, 0, 0])),
            rank(group.h()),
            rank(group.rotation(&[-r - 1, -l - 1, -1])),
            rank(group.h_times(&[-r, -l, -1])),
            rank(group.rotation(&[-r, -l, -1])),
            rank(group.h_times(&[1, 1, 0])),
        ]
    } else {
        vec![
            rank(group.rotation(&[0, 0, 0])),
            rank(group.h()),
            rank(group.rotation(&[-r - 1, 0, -1])),
            rank(group.h_times(&[-r, 1, -1])),
            rank(group.rotation(&[-r, 1, -1])),
            rank(group.h_times(&[1, 1, 0])),
        ]
    };
    Some(cycle)
}

fn six_cycles(tier: Tier) -> Vec<Job> {
    cgd_jobs(tier, |inst| {
        let cycle = six_cycle(inst).ok_or("not a CGD instance")?;
        let present = inst.graph.contains_cycle(&cycle);
        let girth = inst.graph.girth().map_err(err)?;
        Ok((present && girth <= 6, format!("cycle present: {present}, girth {girth}")))
    })
}

/// Looks for an ordering `(a, b, c, d)` of `S \ {0}` and an automorphism
/// `alpha` of `H` with `a -> b - a`, `b -> c - a`, `c -> d - a`, `d -> -a`,
/// and checks `o(a) = |H| / p`, `p | o(b)`, `<a, b> = H` for it.
pub fn bicayley_relations_hold(h: &AbelianGroup, s: &[Vec<u64>], p: u64) -> Option<[Vec<u64>; 4]> {
    let zero = h.zero();
    let rest: Vec<&Vec<u64>> = s.iter().filter(|x| **x != zero).collect();
    if rest.len() != 4 || s.len() != 5 {
        return None;
    }
    let n = h.order();
    for perm in permutations4() {
        let [a, b, c, d] = perm.map(|i| rest[i].clone());
        if h.additive_order(&a) as usize != n / p as usize || !h.additive_order(&b).is_multiple_of(p) {
            continue;
        }
        let Some(alpha) = extend_to_hom(h, &a, &b, &h.sub(&b, &a), &h.sub(&c, &a)) else {
            continue;
        };
        let image = |x: &Vec<u64>| alpha[h.rank(x)].clone();
        if image(&c) == h.sub(&d, &a) && image(&d) == h.neg(&a) {
            return Some([a, b, c, d]);
        }
    }
    None
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                if a != b && b != c && a != c {
                    out.push([a, b, c, 6 - a - b - c]);
                }
            }
        }
    }
    out
}

/// The automorphism of `H` with `a -> x`, `b -> y`, if `<a, b> = H` and the
/// assignment extends to a bijective homomorphism. Indexed by rank.
fn extend_to_hom(h: &AbelianGroup, a: &[u64], b: &[u64], x: &[u64], y: &[u64]) -> Option<Vec<Vec<u64>>> {
    let n = h.order();
    let mut image: Vec<Option<Vec<u64>>> = vec![None; n];
    image[h.rank(&h.zero())] = Some(h.zero());
    let mut queue = vec![h.zero()];
    while let Some(u) = queue.pop() {
        let iu = image[h.rank(&u)].clone()?;
        for (g, gx) in [(a, x), (b, y)] {
            let v = h.add(&u, g);
            let iv = h.add(&iu, gx);
            match &image[h.rank(&v)] {
                Some(known) if *known != iv => return None,
                Some(_) => {}
                None => {
                    image[h.rank(&v)] = Some(iv);
                    queue.push(v);
                }
            }
        }
    }
    let image: Vec<Vec<u64>> = image.into_iter().collect::<Option<_>>()?;
    let mut seen = vec![false; n];
    for y in &image {
        let r = h.rank(y);
        if std::mem::replace(&mut seen[r], true) {
            return None;
        }
    }
    Some(image)
}

fn bicayley_relations(tier: Tier) -> Vec<Job> {
    cgd_jobs(tier, |inst| {
        let (h, s) = inst.bicayley_set().ok_or("no bi-Cayley form")?;
        let found = bicayley_relations_hold(&h, &s, inst.params.p);
        Ok((found.is_some(), if found.is_some() { String::new() } else { "no ordering of S satisfies the relations".into() }))
    })
}

fn brute_force_oracle() -> Vec<Job> {
    vec![job("connected graphs on 1..=7 vertices", false, || {
        let mut mismatches = Vec::new();
        let mut counted = Vec::new();
        for n in 1..=7 {
            let small = SmallGraphs::new(n);
            let connected: Vec<SmallGraph> = small.all().into_iter().filter(|g| g.graph.is_connected()).collect();
            counted.push(connected.len());
            for g in &connected {
                let order = automorphism_group(&g.graph).map_err(err)?.order;
                if order != small.aut_order(g.mask) {
                    mismatches.push(format!("aut order of {:?}", g.graph));
                }
            }
            for (g1, g2, brute) in small.iso_pairs(&connected) {
                let found = crate::symmetry::are_isomorphic(&g1, &g2).map_err(err)?;
                let certified = found.as_ref().is_none_or(|p| g1.is_isomorphism_to(&g2, p));
                if found.is_some() != brute || !certified {
                    mismatches.push(format!("isomorphism of {g1:?} and {g2:?}"));
                }
            }
        }
        let note = format!("connected graphs per order: {counted:?}; {} mismatches", mismatches.len());
        Ok((mismatches.is_empty() && counted == [1, 1, 2, 6, 21, 112, 853], note))
    })]
}
