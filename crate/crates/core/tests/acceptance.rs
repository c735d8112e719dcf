//! Acceptance suite. Runs each criterion once, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

mod common;

use std::collections::{BTreeSet, HashSet};
use std::time::Instant;

use bn_ogs::ogs::{exchange_cases, exchange_formula, exchange_tau_in, OgsExponents, TauPower};
use bn_ogs::sn::{exchange_t_in, SnOgsExponents};
use bn_ogs::{
    check_descent_law, descents, elementary_factorize, from_ogs, greedy_reduce, is_elementary,
    is_in_sdot, length, length_sdot, normal_form, t_to_tau, tau_to_t, to_ogs, uv_factorize,
    CoxeterWord, DescentLaw, SignedPermutation,
};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn perm(w: &[i32]) -> SignedPermutation {
    SignedPermutation::from_window(w.to_vec()).unwrap()
}

fn ogs(v: &[i32]) -> OgsExponents {
    OgsExponents::new(v.to_vec()).unwrap()
}

fn ogs_at(n: usize, pairs: &[(usize, i32)]) -> OgsExponents {
    let mut v = vec![0; n];
    for &(k, e) in pairs {
        v[k - 1] = e;
    }
    ogs(&v)
}

fn sdot(n: usize) -> Vec<OgsExponents> {
    all_unsigned(n).iter().map(|w| to_ogs(&perm(w))).collect()
}

fn bijection() -> Outcome {
    let mut summary = Vec::new();
    for n in 1..=5 {
        let group: HashSet<Window> = bfs(n).into_keys().collect();
        let mut seen = HashSet::new();
        let vectors = all_exponents(n);
        for v in &vectors {
            let w = from_ogs(&ogs(v));
            ensure(seen.insert(w.window().to_vec()), || {
                format!("n={n}: {v:?} repeats an element")
            })?;
            ensure(to_ogs(&w).as_slice() == v.as_slice(), || {
                format!("n={n}: round trip of {v:?}")
            })?;
            ensure(w.window() == tau_product(v).as_slice(), || {
                format!("n={n}: {v:?} disagrees with word product")
            })?;
        }
        let expected: usize = (1..=n).map(|k| 2 * k).product();
        ensure(vectors.len() == expected && seen.len() == expected, || {
            format!("n={n}: count")
        })?;
        ensure(seen == group, || {
            format!("n={n}: image differs from the group")
        })?;
        summary.push(format!("n={n}:{}", seen.len()));
    }
    Ok(summary.join(" "))
}

fn exchange_b() -> Outcome {
    let n = 6;
    let (mut tuples, mut with_row, mut rows_checked) = (0, 0, 0);
    for q in 2..=n {
        for p in 1..q {
            for rq in (-(q as i32)..q as i32).filter(|&x| x != 0) {
                for rp in (-(p as i32)..p as i32).filter(|&x| x != 0) {
                    tuples += 1;
                    let truth = to_ogs(&perm(&tau_factors(n, &[(q, rq), (p, rp)])));
                    let law = exchange_tau_in(n, q, rq, p, rp).map_err(|e| e.to_string())?;
                    ensure(law.canonical == truth, || {
                        format!("tau{q}^{rq}*tau{p}^{rp}: {} vs {truth}", law.canonical)
                    })?;
                    if law.case.is_some() {
                        with_row += 1;
                        ensure(law.formula_agrees(), || {
                            format!(
                                "tau{q}^{rq}*tau{p}^{rp}: first row {:?} gives {:?}",
                                law.case, law.formula
                            )
                        })?;
                    }
                    for c in exchange_cases(q, rq, p, rp) {
                        rows_checked += 1;
                        let f = exchange_formula(n, c, q, rq, p, rp);
                        ensure(f.as_ref() == Some(&truth), || {
                            format!(
                                "tau{q}^{rq}*tau{p}^{rp}: row {c:?} gives {f:?}, expected {truth}"
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{tuples} tuples; {with_row} covered by a table row ({rows_checked} row evaluations, all exact); {} with r_q < 0 checked by composition only",
        tuples - with_row
    ))
}

fn exchange_s() -> Outcome {
    let n = 7;
    let mut tuples = 0;
    for q in 3..=n {
        for p in 2..q {
            for iq in 1..q as i32 {
                for ip in 1..p as i32 {
                    tuples += 1;
                    let prod = compose(&power(&t(n, q), iq as i64), &power(&t(n, p), ip as i64));
                    let law = exchange_t_in(n, q, iq, p, ip).map_err(|e| e.to_string())?;
                    let input = || format!("t{q}^{iq}*t{p}^{ip}");
                    ensure(
                        law.canonical.to_permutation().window() == prod.as_slice(),
                        || format!("{}: canonical", input()),
                    )?;
                    ensure(law.formula_agrees(), || {
                        format!("{}: row {:?} gives {:?}", input(), law.case, law.formula)
                    })?;
                }
            }
        }
    }
    Ok(format!("{tuples} tuples"))
}

fn worked_examples() -> Outcome {
    let mut count = 0;
    let mut check = |ok: bool, what: &str| -> Result<(), String> {
        count += 1;
        ensure(ok, || what.to_string())
    };

    let w = perm(&[-2, -1, -4, -3]);
    check(
        to_ogs(&w) == ogs(&[-1, 1, -1, -3]),
        "canonical form of [-2,-1,-4,-3]",
    )?;
    let a = from_ogs(&ogs(&[-1, 1, -1, 0]));
    let b = from_ogs(&ogs(&[0, 0, 0, -3]));
    check((&a * &b) == w, "left-to-right product pin")?;
    let a = from_ogs(&ogs_at(5, &[(3, -2), (4, -1)]));
    let b = from_ogs(&ogs_at(5, &[(5, 3)]));
    check((&a * &b).window() == [1, 4, 5, 3, 2], "[1,4,5,3,2] product")?;

    let y = [1usize, 3, 0, 4, 7, 3];
    let letters: Vec<usize> = y
        .iter()
        .enumerate()
        .flat_map(|(i, &yi)| (0..yi).map(move |j| i.abs_diff(j)))
        .collect();
    let w = CoxeterWord::new(6, letters).unwrap().eval();
    let nf = normal_form(&w);
    check(nf.y == y, "normal form y = (1,3,0,4,7,3)")?;
    check(
        nf.length() == 18 && length(&to_ogs(&w)) == 18,
        "normal form length 18",
    )?;
    check(
        bfs(6)[w.window()] == 18,
        "normal form example length by search",
    )?;

    let e13 = ogs_at(13, &[(9, -8), (10, 1), (11, -3), (13, 10)]);
    check(
        from_ogs(&e13).window() == [1, 5, 7, 8, 9, 10, 11, 12, 13, 4, 6, 2, 3],
        "rank 13 window",
    )?;
    check(is_in_sdot(&e13), "rank 13 membership")?;

    let e10 = ogs_at(10, &[(6, -5), (8, 2), (9, 2), (10, 1)]);
    let w10 = from_ogs(&e10);
    check(
        w10.window() == [1, 4, 5, 7, 8, 10, 2, 3, 6, 9],
        "elementary window",
    )?;
    check(descents(&w10).to_vec() == [6], "elementary descent set {6}")?;
    check(is_elementary(&e10), "elementary test")?;
    let t10 = tau_to_t(&e10).unwrap();
    check(
        t10.to_string() == "t6^1*t8^2*t9^2*t10^1" && t_to_tau(&t10) == e10,
        "tau/t conversion",
    )?;

    let e12 = ogs_at(12, &[(5, -3), (7, 2), (8, -4), (9, 4), (11, -3), (12, 4)]);
    let fz = elementary_factorize(&e12).unwrap();
    check(fz.z == 3, "z = 3")?;
    check(
        fz.factors
            == [
                ogs_at(12, &[(5, -3), (7, 2), (8, 1)]),
                ogs_at(12, &[(8, -5), (9, 4), (11, 1)]),
                ogs_at(12, &[(11, -4), (12, 4)]),
            ],
        "three elementary factors",
    )?;

    let e9 = ogs_at(9, &[(3, 2), (4, 3), (5, -2), (7, 4), (8, 2), (9, 4)]);
    let uv = uv_factorize(&e9);
    check(uv.ps == [2, 4, 7], "uv blocks 2, 4, 7")?;
    check(
        uv.us
            == [
                OgsExponents::identity(9),
                ogs_at(9, &[(2, -2), (3, 2)]),
                ogs_at(9, &[(4, -1), (5, -2), (7, 3)]),
                ogs_at(9, &[(7, -6), (8, 2), (9, 4)]),
            ],
        "uv parts",
    )?;

    let e5 = ogs_at(5, &[(2, 1), (3, 1), (4, 3), (5, 2)]);
    check(length(&e5) == 13, "length 13")?;
    let uv5 = uv_factorize(&e5);
    check(uv5.ps == [1, 2, 4], "length example blocks")?;

    let d = ogs_at(5, &[(3, -2), (4, -1), (5, 3)]);
    check(descents(&from_ogs(&d)).to_vec() == [3, 4], "descents {3,4}")?;
    let u = ogs_at(10, &[(8, -8), (9, 4), (10, 4)]);
    let vu = &TauPower::longest(8).to_permutation(10) * &from_ogs(&u);
    check(
        descents(&vu).to_vec() == (0..8).collect::<Vec<_>>(),
        "descents {0..7}",
    )?;
    check(
        check_descent_law(&DescentLaw::VThenU { a: 8, u }).unwrap(),
        "v·u law on example",
    )?;
    let u = ogs_at(5, &[(3, -1), (4, -2), (5, 3)]);
    let uvp = &from_ogs(&u) * &TauPower::longest(5).to_permutation(5);
    check(descents(&uvp).to_vec() == [0, 1, 2], "descents {0,1,2}")?;
    check(
        check_descent_law(&DescentLaw::UThenV { u, b: 5 }).unwrap(),
        "u·v law on example",
    )?;
    Ok(format!("{count} checks"))
}

fn lengths() -> Outcome {
    let mut total = 0;
    for n in [4, 5] {
        let dist = bfs(n);
        for (w, &d) in &dist {
            let p = perm(w);
            let d = d as u64;
            let alt = length(&to_ogs(&p));
            let nf = normal_form(&p);
            let g = greedy_reduce(&p);
            ensure(alt == d, || format!("{p}: alternating {alt}, search {d}"))?;
            ensure(nf.length() as u64 == d && nf.word.eval() == p, || {
                format!("{p}: normal form {:?}", nf.y)
            })?;
            ensure(g.len() as u64 == d && g.eval() == p, || {
                format!("{p}: greedy {g}")
            })?;
        }
        total += dist.len();
        for k in 1..=n.min(5) {
            let w = power(&tau(n, k), -(k as i64));
            ensure(dist[&w] as usize == k * k, || {
                format!("tau{k}^-{k} has length {}", dist[&w])
            })?;
            ensure(
                length(&ogs_at(n, &[(k, -(k as i32))])) as usize == k * k,
                || format!("tau{k}^-{k} formula"),
            )?;
        }
    }
    Ok(format!(
        "{total} elements (384 + 3840); tau_k^-k = k^2 for k <= 5"
    ))
}

fn sdot_length() -> Outcome {
    let dist = bfs(5);
    let elems = sdot(5);
    for e in &elems {
        let w = from_ogs(e);
        let l = length_sdot(e).map_err(|x| x.to_string())?;
        ensure(l == dist[w.window()] as u64, || {
            format!("{e}: {l} vs {}", dist[w.window()])
        })?;
        ensure(l == inversions(w.window()) as u64, || {
            format!("{e}: inversions")
        })?;
    }
    Ok(format!("{} elements", elems.len()))
}

fn membership() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for v in all_exponents(n) {
            cases += 1;
            let positive = tau_product(&v).iter().all(|&x| x > 0);
            ensure(is_in_sdot(&ogs(&v)) == positive, || format!("{v:?}"))?;
        }
    }
    let elems = sdot(5);
    let mut images = HashSet::new();
    for e in &elems {
        let t = tau_to_t(e).map_err(|x| x.to_string())?;
        ensure(t.to_permutation() == from_ogs(e), || {
            format!("{e}: t form {t}")
        })?;
        ensure(t_to_tau(&t) == *e, || format!("{e}: round trip"))?;
        images.insert(t);
    }
    ensure(images.len() == 120, || "t forms are not distinct".into())?;
    let mut all_t = 0;
    for a in 0..2 {
        for b in 0..3 {
            for c in 0..4 {
                for d in 0..5 {
                    let t = SnOgsExponents::new(5, vec![a, b, c, d]).unwrap();
                    ensure(tau_to_t(&t_to_tau(&t)).as_ref() == Ok(&t), || {
                        format!("{t}: round trip")
                    })?;
                    all_t += 1;
                }
            }
        }
    }
    Ok(format!(
        "{cases} exponent vectors; {} + {all_t} round trips",
        elems.len()
    ))
}

fn elementary() -> Outcome {
    let elems = sdot(6);
    for e in &elems {
        let fz = elementary_factorize(e).map_err(|x| x.to_string())?;
        let negs = e.factors().filter(|t| t.e < 0).count();
        ensure(fz.z == negs, || format!("{e}: z = {}", fz.z))?;
        ensure(fz.factors.len() == negs.max(1), || {
            format!("{e}: {} factors", fz.factors.len())
        })?;
        ensure(fz.factors.iter().all(is_elementary), || {
            format!("{e}: non-elementary factor")
        })?;
        let prod = fz
            .factors
            .iter()
            .fold(identity(6), |acc, f| compose(&acc, from_ogs(f).window()));
        ensure(prod == from_ogs(e).window(), || format!("{e}: product"))?;
    }
    Ok(format!("{} elements", elems.len()))
}

fn check_uv(v: &[i32]) -> Result<(), String> {
    let n = v.len();
    let e = ogs(v);
    let fz = uv_factorize(&e);
    let mut prod = identity(n);
    for (j, u) in fz.us.iter().enumerate() {
        if j > 0 {
            prod = compose(&prod, &power(&tau(n, fz.ps[j - 1]), fz.ps[j - 1] as i64));
        }
        let uw = tau_product(u.as_slice());
        ensure(uw.iter().all(|&x| x > 0), || {
            format!("{e}: u{} = {u} has a negative entry", j + 1)
        })?;
        let lo = if j == 0 { 1 } else { fz.ps[j - 1] };
        let hi = fz.ps.get(j).copied().unwrap_or(n);
        ensure(u.factors().all(|t| lo <= t.k && t.k <= hi), || {
            format!("{e}: u{} = {u} outside [{lo}, {hi}]", j + 1)
        })?;
        prod = compose(&prod, &uw);
    }
    ensure(prod == from_ogs(&e).window(), || {
        format!("{e}: product of {fz}")
    })?;
    ensure(fz.ps.windows(2).all(|w| w[0] < w[1]), || {
        format!("{e}: blocks {:?}", fz.ps)
    })?;
    fz.check_window_conditions()
        .map_err(|x| format!("{e}: {x}"))
}

fn uv() -> Outcome {
    let all4 = all_exponents(4);
    for v in &all4 {
        check_uv(v)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x005e_edb8);
    let n = 8;
    for _ in 0..10_000 {
        let mut w = identity(n);
        w.shuffle(&mut rng);
        for x in &mut w {
            if rng.random_bool(0.5) {
                *x = -*x;
            }
        }
        check_uv(to_ogs(&perm(&w)).as_slice())?;
    }
    Ok(format!(
        "{} elements of B_4; 10000 random elements of B_8",
        all4.len()
    ))
}

fn descent_laws() -> Outcome {
    let mut cases = 0;
    for e in sdot(5) {
        cases += 1;
        let negs: Vec<usize> = e.factors().filter(|t| t.e < 0).map(|t| t.k).collect();
        ensure(descent_set(from_ogs(&e).window()) == negs, || {
            format!("{e}: negative exponents {negs:?}")
        })?;
        ensure(
            check_descent_law(&DescentLaw::Sdot(e.clone())) == Ok(true),
            || format!("{e}: law"),
        )?;
    }
    for k in 1..=5 {
        cases += 1;
        let w = power(&tau(5, k), -(k as i64));
        ensure(descent_set(&w) == (0..k).collect::<Vec<_>>(), || {
            format!("tau{k}^-{k}")
        })?;
        ensure(
            descents(&perm(&w)).to_vec() == (0..k).collect::<Vec<_>>(),
            || format!("tau{k}^-{k} library"),
        )?;
    }
    let mut pairs = 0;
    for n in 1..=5 {
        for e in sdot(n) {
            let uw = from_ogs(&e);
            let du: BTreeSet<usize> = descent_set(uw.window()).into_iter().collect();
            let lo = e.factors().next().map_or(n, |t| t.k);
            let hi = e.factors().last().map_or(0, |t| t.k);
            for a in 1..=lo {
                pairs += 1;
                let actual = descent_set(&compose(&power(&tau(n, a), -(a as i64)), uw.window()));
                let predicted: Vec<usize> = (0..n)
                    .filter(|&j| (j < a && !du.contains(&j)) || (j > a && du.contains(&j)))
                    .collect();
                ensure(actual == predicted, || {
                    format!("tau{a}^-{a} * ({e}) in rank {n}")
                })?;
                ensure(!actual.contains(&a), || {
                    format!("{a} is a descent of tau{a}^-{a} * ({e})")
                })?;
                ensure(
                    check_descent_law(&DescentLaw::VThenU { a, u: e.clone() }) == Ok(true),
                    || format!("v·u law {a} {e}"),
                )?;
            }
            for b in hi.max(1)..=n {
                pairs += 1;
                let actual = descent_set(&compose(uw.window(), &power(&tau(n, b), b as i64)));
                let predicted: Vec<usize> = (0..n)
                    .filter(|&j| (j < hi && !du.contains(&j)) || (hi <= j && j < b))
                    .collect();
                ensure(actual == predicted, || {
                    format!("({e}) * tau{b}^{b} in rank {n}")
                })?;
                ensure((hi..b).all(|j| actual.contains(&j)), || {
                    format!("({e}) * tau{b}^{b}: [{hi}, {b}) not all descents")
                })?;
                ensure(
                    check_descent_law(&DescentLaw::UThenV { u: e.clone(), b }) == Ok(true),
                    || format!("u·v law {e} {b}"),
                )?;
            }
        }
    }
    let dist = bfs(4);
    for (w, &d) in &dist {
        cases += 1;
        let shortening: Vec<usize> = (0..4)
            .filter(|&i| dist[&compose(&generator(4, i), w)] < d)
            .collect();
        ensure(descents(&perm(w)).to_vec() == shortening, || {
            format!("{w:?}: shortening generators {shortening:?}")
        })?;
    }
    Ok(format!("{cases} elements; {pairs} v·u / u·v pairs"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("canonical-form bijection, n = 1..5", bijection),
        ("B_n exchange laws, n = 6", exchange_b),
        ("S_n exchange laws, n = 7", exchange_s),
        ("worked examples", worked_examples),
        ("length agreement on B_4 and B_5", lengths),
        ("subgroup length formula on S_5", sdot_length),
        ("subgroup membership and tau/t round trip", membership),
        ("elementary factorization on S_6", elementary),
        ("u·v factorization", uv),
        ("descent characterizations", descent_laws),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {:>2}: {name} [{detail}] ({secs:.2}s)",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
