//! Acceptance suite: one pass/fail line per criterion, each with its time budget.
//! Runs with `harness = false` so the lines always reach the console.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use icanon::canonical::{
    canonical_table_with, coincide_a, coincide_b, coincide_d, dual_icanonical, icanonical_basis,
    quasi_r_consistency, verify_upsilon_intertwine, CanKind,
};
use icanon::flaggeo::{enumerate_flags, iwahori_check, partial_flag_duality_check};
use icanon::hecke::{
    dual_kl_basis, kl_basis, kl_basis_in_order, parabolic_table, Basis, HeckeElt, HeckeParams, KlTable,
};
use icanon::iqg::{verify_ischur_commute, verify_quasi_k, verify_serre_i, IParams};
use icanon::laurent::LaurentPoly;
use icanon::qtensor::{
    verify_jimbo, verify_quasi_r, verify_serre_example, TensorElt, TensorIndex, TensorSpace,
};
use icanon::report::Report;
use icanon::weyl::{self, longest_element, Kind, WeylElt};

type Check = Result<Report, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn absorb(total: &mut Report, r: Result<Report, impl ToString>) {
    match r {
        Ok(r) => total.absorb(&r),
        Err(e) => total.record(false, || e.to_string()),
    }
}

fn h(p: HeckeParams, word: &[usize]) -> HeckeElt {
    HeckeElt::standard(p, WeylElt::from_word(p.kind, p.rank, word).unwrap())
}

fn criterion_1() -> Check {
    let mut r = Report::new("kl-s3-examples");
    let p = HeckeParams::equal(Kind::A, 3);
    let c = kl_basis(p).map_err(|e| e.to_string())?;
    let l = dual_kl_basis(p).map_err(|e| e.to_string())?;
    let get = |t: &KlTable, w: &[usize]| {
        t.get(&WeylElt::from_word(Kind::A, 3, w).unwrap()).unwrap().element.clone()
    };
    let one = HeckeElt::one(p);
    for i in [1, 2] {
        r.record(get(&c, &[i]) == &h(p, &[i]) + &one.scale(&lp("q")), || format!("C_s{i}"));
        r.record(get(&l, &[i]) == &h(p, &[i]) - &one.scale(&lp("q^-1")), || format!("L_s{i}"));
    }
    let expect = [(&[1usize, 2][..], "1"), (&[1][..], "q"), (&[2][..], "q"), (&[][..], "q^2")]
        .iter()
        .fold(HeckeElt::zero(p), |acc, (w, x)| &acc + &h(p, w).scale(&lp(x)));
    r.record(get(&c, &[1, 2]) == expect, || "C_{s1 s2}".into());
    let w0 = longest_element(Kind::A, 3);
    let top = w0.length() as i32;
    let sym = HeckeElt::from_terms(
        p,
        weyl::enumerate(Kind::A, 3).unwrap().into_iter().map(|w| {
            let e = top - w.length() as i32;
            (w, LaurentPoly::monomial(1, e))
        }),
    );
    r.record(c.get(&w0).unwrap().element == sym, || "C_w0 is not the q-symmetrizer".into());
    Ok(r)
}

fn subsets(gens: &[usize]) -> Vec<Vec<usize>> {
    (0..1u32 << gens.len())
        .map(|mask| gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &g)| g).collect())
        .collect()
}

fn criterion_2() -> Check {
    let mut r = Report::new("bar-invariance-uniqueness");
    let mut groups =
        vec![HeckeParams::equal(Kind::A, 3), HeckeParams::equal(Kind::A, 4), HeckeParams::equal(Kind::D, 3)];
    for k in 0..=2 {
        groups.push(HeckeParams::new(Kind::B, 2, k));
        groups.push(HeckeParams::new(Kind::B, 3, k));
    }
    for p in groups {
        let name = format!("{} k={}", p.name(), p.k);
        let mut order = weyl::enumerate(p.kind, p.rank).unwrap();
        order.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| b.images().cmp(a.images())));
        for basis in [Basis::C, Basis::L] {
            let t = kl_basis_in_order(p, basis, weyl::enumerate(p.kind, p.rank).unwrap())
                .map_err(|e| e.to_string())?;
            let res = t.verify();
            r.record(res.is_ok(), || format!("{name} {}: {res:?}", basis.letter()));
            let permuted = kl_basis_in_order(p, basis, order.clone()).map_err(|e| e.to_string())?;
            r.record(permuted == t, || format!("{name} {}: order dependence", basis.letter()));
            for j in subsets(&p.generators()) {
                let res = parabolic_table(p, &j, basis).map_err(|e| e.to_string()).and_then(|t| {
                    for e in &t.entries {
                        if !e.element.is_bar_invariant() {
                            return Err(format!("entry {} not bar-invariant", e.index.word_string()));
                        }
                        for (w, c) in &e.coeffs {
                            let ok = if w == &e.index { c.is_one() } else { basis.lattice().contains(c) };
                            if !ok {
                                return Err(format!("coefficient {c} in {}", e.index.word_string()));
                            }
                        }
                    }
                    Ok(())
                });
                r.record(res.is_ok(), || format!("{name} {}^J J={j:?}: {res:?}", basis.letter()));
            }
        }
    }
    Ok(r)
}

fn criterion_3() -> Check {
    let mut r = Report::new("canonical-equals-parabolic-kl-a");
    for n in 1..=4 {
        for m in 1..=4 {
            absorb(&mut r, coincide_a(n, m));
        }
    }
    Ok(r)
}

fn criterion_4() -> Check {
    let mut r = Report::new("icanonical-equals-kl-bd");
    for n in 1..=4 {
        for m in 1..=3 {
            absorb(&mut r, coincide_b(n, m));
            absorb(&mut r, coincide_d(n, m));
            for kind in [CanKind::ICanonical(1), CanKind::ICanonical(0), CanKind::DualICanonical(1)] {
                let t = canonical_table_with(kind, TensorSpace::new(n, m).unwrap(), false);
                let res = t.map_err(|e| e.to_string()).and_then(|t| t.verify());
                r.record(res.is_ok(), || format!("{kind:?} N={n} m={m}: {res:?}"));
            }
        }
    }
    let entry =
        |t: &icanon::canonical::CanTable, f: i32| t.get(&TensorIndex(vec![f])).unwrap().element.clone();
    let elt = |s: TensorSpace, terms: &[(i32, &str)]| {
        TensorElt::from_terms(s, terms.iter().map(|(f, c)| (TensorIndex(vec![*f]), lp(c))))
    };
    // N even: {v_i, v_-i + q v_i}
    let v4 = TensorSpace::new(4, 1).unwrap();
    let t = icanonical_basis(4, 1, 1).map_err(|e| e.to_string())?;
    for i in [1, 3] {
        r.record(entry(&t, i) == elt(v4, &[(i, "1")]), || format!("v_{i}"));
        r.record(entry(&t, -i) == elt(v4, &[(-i, "1"), (i, "q")]), || format!("v_-{i} + q v_{i}"));
    }
    // N odd: {v_0, v_i, v_-i + q v_i} and dual {v_0, v_i, v_-i - q^-1 v_i}
    let v3 = TensorSpace::new(3, 1).unwrap();
    let t = icanonical_basis(3, 1, 1).map_err(|e| e.to_string())?;
    let d = dual_icanonical(3, 1, 1).map_err(|e| e.to_string())?;
    r.record(entry(&t, 0) == elt(v3, &[(0, "1")]) && entry(&d, 0) == elt(v3, &[(0, "1")]), || "v_0".into());
    r.record(entry(&t, 2) == elt(v3, &[(2, "1")]) && entry(&d, 2) == elt(v3, &[(2, "1")]), || "v_1".into());
    r.record(entry(&t, -2) == elt(v3, &[(-2, "1"), (2, "q")]), || "v_-1 + q v_1".into());
    r.record(entry(&d, -2) == elt(v3, &[(-2, "1"), (2, "-q^-1")]), || "v_-1 - q^-1 v_1".into());
    Ok(r)
}

fn criterion_5() -> Check {
    let mut r = Report::new("jimbo");
    for n in 1..=4 {
        for m in 1..=3 {
            absorb(&mut r, verify_jimbo(n, m));
        }
    }
    Ok(r)
}

fn criterion_6() -> Check {
    let mut r = Report::new("ischur");
    for n in [3, 4, 5] {
        for m in 1..=3 {
            for k in 0..=2 {
                absorb(&mut r, verify_ischur_commute(IParams::new(n, k), m));
                absorb(&mut r, verify_serre_i(IParams::new(n, k), m));
            }
        }
    }
    Ok(r)
}

fn criterion_7() -> Check {
    let mut r = Report::new("quasi-r");
    for n in 1..=3 {
        for m in [2, 3] {
            absorb(&mut r, verify_quasi_r(n, m));
            absorb(&mut r, quasi_r_consistency(n, m));
        }
    }
    Ok(r)
}

fn criterion_8() -> Check {
    let mut r = Report::new("quasi-k");
    for k in 0..=2 {
        absorb(&mut r, verify_quasi_k(k, 8));
    }
    absorb(&mut r, verify_upsilon_intertwine(3, 2, 1));
    Ok(r)
}

fn criterion_9() -> Check {
    let mut r = Report::new("geometry");
    let count = |m, q| enumerate_flags(m, q).map(|f| f.len()).unwrap_or(0);
    r.record(count(2, 2) == 3, || format!("{} flags for m=2, q=2", count(2, 2)));
    r.record(count(3, 2) == 21, || format!("{} flags for m=3, q=2", count(3, 2)));
    for m in 1..=3 {
        for q in [2, 3] {
            absorb(&mut r, iwahori_check(m, q));
        }
    }
    absorb(&mut r, partial_flag_duality_check(2, 2, 2));
    Ok(r)
}

fn criterion_10() -> Check {
    let mut r = Report::new("serre-example");
    for m in 1..=3 {
        absorb(&mut r, verify_serre_example(m));
    }
    Ok(r)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("KL S3 examples", criterion_1, Duration::from_secs(1)),
        ("bar-invariance and uniqueness", criterion_2, Duration::from_secs(30)),
        ("canonical = parabolic KL (type A)", criterion_3, Duration::from_secs(300)),
        ("i-canonical = KL (types B, D)", criterion_4, Duration::from_secs(300)),
        ("Jimbo duality and braid relations", criterion_5, Duration::from_secs(60)),
        ("iSchur duality and relations", criterion_6, Duration::from_secs(300)),
        ("quasi R-matrix", criterion_7, Duration::from_secs(60)),
        ("quasi K-matrix", criterion_8, Duration::from_secs(120)),
        ("flag geometry", criterion_9, Duration::from_secs(600)),
        ("Serre example", criterion_10, Duration::from_secs(10)),
    ];
    let mut failed = BTreeMap::new();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (ok, detail) = match &result {
            Ok(r) if r.passed() => (took <= *budget, format!("{} checks", r.checked)),
            Ok(r) => (false, r.summary_line()),
            Err(e) => (false, e.clone()),
        };
        let status = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name}: {detail}; {:.2}s (budget {}s)",
            i + 1,
            took.as_secs_f64(),
            budget.as_secs()
        );
        if !ok {
            failed.insert(i + 1, name);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {:?}", failed.keys().collect::<Vec<_>>());
        ExitCode::FAILURE
    }
}
