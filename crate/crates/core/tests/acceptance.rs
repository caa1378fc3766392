//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use lyubeznik::complex::{
    class_census, classify_subset, is_admissible_symbol, is_broken, is_preserved, is_stable_symbol,
    lyubeznik_complex, symbols_of_dimension,
};
use lyubeznik::covers::{all_covers, covers_of, is_cover};
use lyubeznik::graphs::cycle_graph;
use lyubeznik::invariants::{
    ara_bounds, betti_from_preserved, is_lyubeznik, is_minimal_resolution, is_totally_lyubeznik, l_length,
    min_l_length, min_preserved_size, minimality_conditions, preserved_size,
};
use lyubeznik::monomial::lcm_of;
use lyubeznik::oracle::{projdim_oracle, taylor_betti, verify_chain_complex, verify_resolution};
use lyubeznik::orders::all_orders;
use lyubeznik::{corpus, GenSet, MonomialIdeal, OracleConfig, OrderedIdeal, SearchConfig, Symbol};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `{m1,m3}` from `[1, 3]`.
fn set(one_based: &[usize]) -> GenSet {
    one_based.iter().map(|i| i - 1).collect()
}

fn sets(list: &[&[usize]]) -> Vec<GenSet> {
    let mut v: Vec<GenSet> = list.iter().map(|s| set(s)).collect();
    v.sort_by(GenSet::canonical_cmp);
    v
}

fn sorted(mut v: Vec<GenSet>) -> Vec<GenSet> {
    v.sort_by(GenSet::canonical_cmp);
    v
}

fn identity(ideal: MonomialIdeal) -> OrderedIdeal {
    OrderedIdeal::identity(Arc::new(ideal))
}

// Definitions evaluated directly on monomials, independent of the subset tables.

fn lcm_direct(set: GenSet, ideal: &MonomialIdeal) -> lyubeznik::Monomial {
    lcm_of(set.iter().map(|g| ideal.generator(g))).unwrap()
}

fn divides_direct(u: usize, set: GenSet, ideal: &MonomialIdeal) -> bool {
    !set.is_empty() && ideal.generator(u).divides(&lcm_direct(set, ideal)).unwrap()
}

fn is_court_direct(u: usize, d: GenSet, o: &OrderedIdeal) -> bool {
    !d.is_empty()
        && !d.contains(u)
        && divides_direct(u, d, o.ideal())
        && d.iter().all(|x| o.rank(u) < o.rank(x))
}

fn broken_direct(d: GenSet, o: &OrderedIdeal) -> bool {
    (0..o.ideal().mu()).any(|u| is_court_direct(u, d, o))
}

fn preserved_direct(s: GenSet, o: &OrderedIdeal) -> bool {
    s.subsets().all(|d| !broken_direct(d, o))
}

fn cover_direct(s: GenSet, ideal: &MonomialIdeal) -> bool {
    s.len() >= 2 && s.iter().any(|u| divides_direct(u, s.without(u), ideal))
}

fn criterion_1() -> Check {
    let o = identity(corpus::i1());
    let ideal = o.ideal();
    let members = |u| sorted(covers_of(u, ideal).unwrap().iter().map(|c| c.members).collect());
    let m1 = sets(&[
        &[1, 2, 3, 4, 5],
        &[1, 3, 4, 5],
        &[1, 2, 3, 5],
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 2, 3, 4],
    ]);
    let m2 = sets(&[&[2, 4, 5], &[1, 2, 4, 5], &[2, 3, 4, 5], &[1, 2, 3, 4, 5]]);
    ensure(members(0) == m1, || format!("covers of m1: {:?}", members(0)))?;
    ensure(members(1) == m2, || format!("covers of m2: {:?}", members(1)))?;
    for u in 2..5 {
        ensure(members(u).is_empty(), || format!("m{} has covers", u + 1))?;
    }
    // (cover, broken subset, court) as listed
    let witnesses: [(&[usize], &[usize], usize); 9] = [
        (&[1, 2, 3, 4, 5], &[2, 3, 4, 5], 1),
        (&[1, 3, 4, 5], &[3, 4, 5], 1),
        (&[1, 2, 3, 5], &[2, 3, 5], 1),
        (&[1, 2, 3], &[2, 3], 1),
        (&[1, 3, 4], &[3, 4], 1),
        (&[1, 2, 3, 4], &[3, 4], 1),
        (&[2, 4, 5], &[4, 5], 2),
        (&[1, 2, 4, 5], &[4, 5], 2),
        (&[2, 3, 4, 5], &[4, 5], 2),
    ];
    for (c, d, court) in witnesses {
        let (c, d) = (set(c), set(d));
        ensure(d.is_subset_of(c), || format!("{d:?} not in {c:?}"))?;
        ensure(is_court_direct(court - 1, d, &o), || format!("m{court} is not a court of {d:?}"))?;
        ensure(is_broken(d, &o).is_some(), || format!("{d:?} not reported broken"))?;
        ensure(!is_preserved(c, &o), || format!("{c:?} reported preserved"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let o = identity(corpus::i2());
    let expect = [
        (2, sets(&[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[3, 5], &[4, 5]]), sets(&[&[2, 5], &[3, 4]])),
        (
            3,
            sets(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 5], &[1, 4, 5]]),
            sets(&[&[1, 2, 5], &[1, 3, 4], &[2, 3, 4], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]]),
        ),
        (
            4,
            vec![],
            sets(&[&[1, 2, 3, 5], &[1, 2, 4, 5], &[1, 3, 4, 5], &[2, 3, 4, 5], &[1, 2, 3, 4]]),
        ),
        (5, vec![], sets(&[&[1, 2, 3, 4, 5]])),
    ];
    for (dim, adm, inadm) in expect {
        let (a, i) = symbols_of_dimension(&o, dim);
        ensure(sorted(a.clone()) == adm, || format!("L{dim} = {a:?}"))?;
        ensure(sorted(i.clone()) == inadm, || format!("L{dim}' = {i:?}"))?;
    }
    let non_stable_admissible = non_stable_admissible(&o);
    ensure(non_stable_admissible == sets(&[&[1, 2, 4], &[1, 4, 5]]), || {
        format!("non-stable admissible: {non_stable_admissible:?}")
    })?;
    let preserved_covers = sorted(
        all_covers(o.ideal())
            .into_iter()
            .map(|c| c.members)
            .filter(|&c| is_preserved(c, &o))
            .collect(),
    );
    ensure(preserved_covers == sets(&[&[1, 2, 4], &[1, 4, 5]]), || {
        format!("preserved covers: {preserved_covers:?}")
    })?;
    ensure(!is_minimal_resolution(&o), || "reported minimal".into())
}

fn non_stable_admissible(o: &OrderedIdeal) -> Vec<GenSet> {
    sorted(
        o.ideal()
            .all_generators()
            .subsets()
            .filter(|s| !s.is_empty())
            .filter(|&s| {
                let sym = Symbol::from_set(s, o);
                is_admissible_symbol(&sym, o) && !is_stable_symbol(&sym, o.ideal())
            })
            .collect(),
    )
}

fn criterion_3() -> Check {
    let ideal = Arc::new(corpus::i3());
    let o = OrderedIdeal::identity(ideal.clone());
    let l2 = sets(&[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6], &[1, 7], &[2, 5], &[2, 7], &[3, 6], &[3, 7]]);
    let l2_in = sets(&[
        &[2, 3], &[2, 4], &[2, 6], &[3, 4], &[3, 5], &[4, 5], &[4, 6], &[4, 7], &[5, 6], &[5, 7], &[6, 7],
    ]);
    let l3 = sets(&[&[1, 2, 5], &[1, 3, 6], &[1, 2, 7], &[1, 3, 7]]);
    let (a2, i2) = symbols_of_dimension(&o, 2);
    let (a3, i3) = symbols_of_dimension(&o, 3);
    ensure(sorted(a2.clone()) == l2, || format!("L2 = {a2:?}"))?;
    ensure(sorted(i2.clone()) == l2_in, || format!("L2' = {i2:?}"))?;
    ensure(sorted(a3.clone()) == l3, || format!("L3 = {a3:?}"))?;
    ensure(i3.len() == 31, || format!("|L3'| = {}", i3.len()))?;
    let all3: Vec<GenSet> = ideal.all_generators().subsets().filter(|s| s.len() == 3).collect();
    ensure(sorted(i3) == sorted(all3.into_iter().filter(|s| !l3.contains(s)).collect()), || {
        "L3' is not the complement of L3".into()
    })?;
    let nsa = non_stable_admissible(&o);
    ensure(nsa == sets(&[&[1, 2, 7], &[1, 3, 7]]), || format!("non-stable admissible: {nsa:?}"))?;
    let stable3 = sorted(
        a3.into_iter()
            .filter(|&s| is_stable_symbol(&Symbol::from_set(s, &o), &ideal))
            .collect(),
    );
    ensure(stable3 == sets(&[&[1, 2, 5], &[1, 3, 6]]), || format!("stable admissible 3-symbols: {stable3:?}"))?;
    let cfg = SearchConfig {
        force: true,
        ..SearchConfig::exhaustive()
    };
    let verdict = is_lyubeznik(&ideal, &cfg).map_err(|e| e.to_string())?;
    let searched = min_l_length(&ideal, &cfg).map_err(|e| e.to_string())?.orders_searched;
    ensure(searched == 5040, || format!("searched {searched} orders"))?;
    ensure(!verdict.lyubeznik && verdict.definitive, || format!("{verdict:?}"))
}

/// Brute force: does some order give a minimal resolution?
fn lyubeznik_direct(ideal: &Arc<MonomialIdeal>) -> bool {
    all_orders(ideal, 8, false).unwrap().any(|o| is_minimal_resolution(&o))
}

fn criterion_4() -> Check {
    let cfg = SearchConfig::exhaustive();
    for (name, ideal, expected) in [
        ("I", corpus::remark_i(), true),
        ("J", corpus::remark_j(), false),
        ("K", corpus::remark_k(), true),
    ] {
        let ideal = Arc::new(ideal);
        let v = is_lyubeznik(&ideal, &cfg).map_err(|e| e.to_string())?;
        ensure(v.lyubeznik == expected && v.definitive, || format!("{name}: {v:?}"))?;
        ensure(lyubeznik_direct(&ideal) == expected, || format!("{name}: brute force disagrees"))?;
    }
    let j = Arc::new(corpus::remark_j());
    let count = all_orders(&j, 8, false).unwrap().filter(|o| !is_minimal_resolution(o)).count();
    ensure(count == 24, || format!("J: {count} of 24 orders are non-minimal"))
}

fn criterion_5() -> Check {
    let cfg = SearchConfig::exhaustive();
    let triangle = Arc::new(corpus::triangle());
    let minimal = all_orders(&triangle, 8, false).unwrap().filter(is_minimal_resolution).count();
    ensure(minimal == 6, || format!("triangle: {minimal} of 6 orders minimal"))?;
    let t = is_totally_lyubeznik(&triangle, &cfg).map_err(|e| e.to_string())?;
    ensure(t.totally, || format!("triangle: {t:?}"))?;

    let square = Arc::new(corpus::square());
    let non_minimal = all_orders(&square, 8, false).unwrap().filter(|o| !is_minimal_resolution(o)).count();
    ensure(non_minimal == 24, || format!("square: {non_minimal} of 24 orders non-minimal"))?;
    let v = is_lyubeznik(&square, &cfg).map_err(|e| e.to_string())?;
    ensure(!v.lyubeznik, || format!("square: {v:?}"))?;

    let graph = cycle_graph(4);
    let labels: Vec<String> = (0..4).map(|k| graph.edge_label(k)).collect();
    ensure(labels == ["ab", "bc", "cd", "ad"], || format!("edge order {labels:?}"))?;
    let o = OrderedIdeal::identity(square.clone());
    let c = set(&[1, 2, 3]);
    ensure(cover_direct(c, &square) && is_cover(&square, c), || "{ab,bc,cd} is not a cover".into())?;
    ensure(preserved_direct(c, &o) && is_preserved(c, &o), || "{ab,bc,cd} is not preserved".into())
}

fn criterion_6() -> Check {
    let oracle = OracleConfig::default();
    let corpus = corpus::corpus();
    ensure(corpus.len() >= 20, || format!("corpus has {} ideals", corpus.len()))?;
    let mut compared = 0usize;
    for (name, ideal) in corpus {
        ensure(ideal.mu() <= 6 && ideal.nvars() <= 6, || format!("{name} too large"))?;
        let ideal = Arc::new(ideal);
        let truth = taylor_betti(&ideal, &oracle).map_err(|e| e.to_string())?;
        let orders: Vec<OrderedIdeal> = all_orders(&ideal, 8, false).unwrap().collect();
        let bad: Vec<Vec<usize>> = orders
            .par_iter()
            .filter(|o| is_minimal_resolution(o))
            .filter(|o| betti_from_preserved(o).unwrap().to_quotient() != truth)
            .map(|o| o.word())
            .collect();
        ensure(bad.is_empty(), || format!("{name}: betti mismatch under {:?}", bad[0]))?;
        compared += orders.iter().filter(|o| is_minimal_resolution(o)).count();
    }
    ensure(compared > 0, || "no minimal orders compared".into())
}

fn theorem_identities(o: &OrderedIdeal, oracle: &OracleConfig) -> Check {
    let ideal = o.ideal();
    let l = l_length(o);
    let ps = preserved_size(o);
    ensure(l == ps, || format!("l_length {l} != ps {ps}"))?;
    let conditions = minimality_conditions(o);
    ensure(conditions.agree(), || format!("predicates disagree: {conditions:?}"))?;
    ensure(conditions.facets_stable == is_minimal_resolution(o), || "minimality mismatch".into())?;
    let complex = lyubeznik_complex(o);
    let mut by_size = vec![0usize; ideal.mu() + 1];
    for s in ideal.all_generators().subsets().filter(|s| !s.is_empty()) {
        let sym = Symbol::from_set(s, o);
        let preserved = preserved_direct(s, o);
        let admissible = is_admissible_symbol(&sym, o);
        ensure(admissible == preserved && is_preserved(s, o) == preserved && complex.contains(s) == preserved, || {
            format!("{s:?}: admissible/preserved/membership disagree")
        })?;
        let cover = cover_direct(s, ideal);
        ensure(is_stable_symbol(&sym, ideal) == !cover && is_cover(ideal, s) == cover, || {
            format!("{s:?}: stable/cover disagree")
        })?;
        let class = classify_subset(s, o).map_err(|e| e.to_string())?;
        ensure(class.is_preserved() == preserved && class.is_cover() == cover, || format!("{s:?}: class {class:?}"))?;
        by_size[s.len()] += 1;
    }
    let census = class_census(&complex);
    for k in 1..=ideal.mu() {
        let total: usize = census[k].iter().sum();
        ensure(total == by_size[k], || format!("census of size {k} sums to {total}"))?;
    }
    ensure(l == complex.max_face_size(), || "l_length is not the largest face".into())?;
    let chain = verify_chain_complex(o);
    ensure(chain.passed(), || format!("boundary does not square to zero: {chain:?}"))?;
    let res = verify_resolution(o, oracle).map_err(|e| e.to_string())?;
    ensure(res.passed(), || format!("not acyclic in {:?}", res.failures().collect::<Vec<_>>()))
}

fn criterion_7() -> Check {
    let oracle = OracleConfig::default();
    let mut ideals = corpus::corpus();
    ideals.push(("i3", corpus::i3()));
    for (name, ideal) in ideals {
        let ideal = Arc::new(ideal);
        let orders: Vec<OrderedIdeal> = all_orders(&ideal, 8, false).unwrap().collect();
        let failure = orders
            .par_iter()
            .map(|o| theorem_identities(o, &oracle).map_err(|e| format!("{name} under {:?}: {e}", o.word())))
            .find_first(|r| r.is_err());
        if let Some(Err(e)) = failure {
            return Err(e);
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let ideal = Arc::new(corpus::koszul_xy());
    let o = OrderedIdeal::identity(ideal.clone());
    let expected: BTreeMap<(usize, u64), u64> = [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)].into();
    let preserved = betti_from_preserved(&o).map_err(|e| e.to_string())?.to_quotient();
    let oracle = OracleConfig::default();
    let taylor = taylor_betti(&ideal, &oracle).map_err(|e| e.to_string())?;
    ensure(preserved.graded() == expected, || format!("preserved: {:?}", preserved.graded()))?;
    ensure(taylor.graded() == expected, || format!("oracle: {:?}", taylor.graded()))?;
    let cfg = SearchConfig::exhaustive();
    let pd = projdim_oracle(&ideal, &oracle).map_err(|e| e.to_string())?;
    let l = min_l_length(&ideal, &cfg).map_err(|e| e.to_string())?.value;
    let ps = min_preserved_size(&ideal, &cfg).map_err(|e| e.to_string())?.value;
    ensure((pd, l, ps) == (2, 2, 2), || format!("projdim {pd}, L {l}, ps {ps}"))?;
    let ara = ara_bounds(&ideal, &cfg, &oracle).map_err(|e| e.to_string())?;
    ensure((ara.lower, ara.upper) == (2, 2), || format!("ara bounds {ara:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("cover census of the five-generator example", criterion_1, Some(Duration::from_secs(1))),
        ("symbol lists of the six-variable example", criterion_2, Some(Duration::from_secs(1))),
        ("symbol lists and order search of the seven-generator example", criterion_3, Some(Duration::from_secs(60))),
        ("remark chain I, J, K", criterion_4, Some(Duration::from_secs(5))),
        ("triangle and 4-cycle edge ideals", criterion_5, Some(Duration::from_secs(5))),
        ("preserved-set Betti numbers match the Taylor oracle", criterion_6, None),
        ("theorem identities on every ideal and order", criterion_7, None),
        ("Koszul sanity", criterion_8, None),
    ];
    let mut failed = 0;
    for (k, (title, check, bound)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, bound) {
            (Ok(()), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(()) => println!("criterion {}: PASS  {title} ({elapsed:.2?})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({elapsed:.2?}): {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
