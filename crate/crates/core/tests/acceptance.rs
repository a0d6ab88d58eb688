//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Time limits are part of each verdict.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lencat::abcat::{
    are_isomorphic, composition_series, counterexample_double_arrow, counterexample_fan_in,
    counterexample_fan_out, enumerate_composition_series, ext1, is_indecomposable, is_uniserial,
    realize_extension, socle, SeriesEnumeration, SimpleFamily,
};
use lencat::gradedrep::{GradedRep, WeylLabel};
use lencat::itext::{from_deformation, splice, to_deformation, IteratedExtension};
use lencat::quiverrep::QuiverPresentation;
use lencat::species::{classify, species_of, uc_check, Species, UcPattern};
use lencat::weyl::{normal_form, Letter, WeylElement};
use lencat::weylcat::{euler_sequence_class, verify_theorem, weyl_family, VerifyReport};
use lencat::Scalar;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> (bool, Duration) {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed < limit;
    let ok = out.ok && in_time;
    println!(
        "[{}] criterion {}: {} ({:.2?}, limit {:.0?}){}{}",
        if ok { "PASS" } else { "FAIL" },
        id,
        title,
        elapsed,
        limit,
        if out.detail.is_empty() { "" } else { " - " },
        out.detail
    );
    if !in_time {
        println!("       time limit exceeded");
    }
    (ok, elapsed)
}

fn alphas() -> Vec<Scalar> {
    vec![Scalar::ratio(1, 2), "1/3+1/2*i".parse().unwrap()]
}

// ---- criterion 1 --------------------------------------------------------

/// Rewrites `d t -> t d + 1` one occurrence at a time until every word is
/// `t^a d^b`; integer coefficients keyed by `(a, b)`.
fn rewrite_oracle(word: &str) -> BTreeMap<(u32, u32), i64> {
    let mut pending = vec![(word.to_string(), 1i64)];
    let mut done: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        match w.find("dt") {
            Some(k) => {
                pending.push((format!("{}td{}", &w[..k], &w[k + 2..]), c));
                pending.push((format!("{}{}", &w[..k], &w[k + 2..]), c));
            }
            None => {
                let a = w.chars().filter(|&ch| ch == 't').count() as u32;
                *done.entry((a, w.len() as u32 - a)).or_default() += c;
            }
        }
    }
    done.retain(|_, c| *c != 0);
    done
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for len in 1..=6u32 {
        for mask in 0..(1u32 << len) {
            let word: String = (0..len).map(|k| if mask >> k & 1 == 1 { 'd' } else { 't' }).collect();
            let letters: Vec<Letter> = word.chars().map(|c| if c == 't' { Letter::T } else { Letter::D }).collect();
            let got = normal_form(&[(Scalar::one(), letters)]);
            let want = rewrite_oracle(&word);
            let agree = got.terms().count() == want.len()
                && want
                    .iter()
                    .all(|(&(a, b), &c)| got.coefficient(a, b) == Scalar::from_int(c));
            if !agree {
                bad.push(word);
            }
            if len == 6 {
                count += 1;
            }
        }
    }
    let (t, d) = (WeylElement::t(), WeylElement::d());
    let comm = d.mul(&t).sub(&t.mul(&d)) == WeylElement::one();
    let mut falling = true;
    for b in 1..=5u32 {
        let lhs = t.pow(b).mul(&d.pow(b));
        let mut rhs = WeylElement::one();
        for k in 0..b {
            rhs = rhs.mul(&WeylElement::euler().sub(&WeylElement::constant(Scalar::from_int(k as i64))));
        }
        falling &= lhs == rhs;
    }
    Outcome {
        ok: bad.is_empty() && comm && falling && count == 64,
        detail: format!(
            "{} length-6 words, {} mismatches overall, [d,t] = 1: {}, falling factorials: {}",
            count,
            bad.len(),
            comm,
            falling
        ),
    }
}

// ---- criterion 2 --------------------------------------------------------

/// The expected Ext table. Twisting moves the generator of `M[s]` to
/// weight `-s`. `D/D t d` maps onto `M_0[0] = D/Dd` with kernel generated by
/// `d` in weight -1 and annihilated by `t`, so the kernel is `M_inf[1]`:
/// the pair `(0, inf)` is nonzero at offset +1, and `(inf, 0)` at -1 by
/// shifting both twists.
fn expected_ext(a: &WeylLabel, b: &WeylLabel, dw: i64) -> usize {
    match (a, b) {
        (WeylLabel::Alpha(x), WeylLabel::Alpha(y)) => usize::from(x == y && dw == 0),
        (WeylLabel::Zero, WeylLabel::Infinity) => usize::from(dw == 1),
        (WeylLabel::Infinity, WeylLabel::Zero) => usize::from(dw == -1),
        _ => 0,
    }
}

fn ext_table(lo: i64, hi: i64) -> Vec<(String, usize, usize)> {
    let mut labels: Vec<WeylLabel> = alphas().into_iter().map(WeylLabel::Alpha).collect();
    labels.push(WeylLabel::Zero);
    labels.push(WeylLabel::Infinity);
    let mut rows = Vec::new();
    for a in &labels {
        let x = GradedRep::simple(a, 0, lo, hi).unwrap().to_quiver_rep().unwrap();
        for b in &labels {
            for dw in -2..=2 {
                let y = GradedRep::simple(b, dw, lo, hi).unwrap().to_quiver_rep().unwrap();
                let got = ext1(&x, &y).unwrap().dim();
                rows.push((format!("Ext({}[0], {}[{}])", a, b, dw), got, expected_ext(a, b, dw)));
            }
        }
    }
    rows
}

fn table_outcome(rows: &[(String, usize, usize)]) -> Outcome {
    let bad: Vec<String> = rows
        .iter()
        .filter(|(_, g, e)| g != e)
        .map(|(n, g, e)| format!("{} = {} (expected {})", n, g, e))
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} entries match", rows.len())
        } else {
            bad.join("; ")
        },
    }
}

// ---- criterion 3 --------------------------------------------------------

fn criterion_3() -> Outcome {
    let labels = vec![
        WeylLabel::Alpha(alphas()[0].clone()),
        WeylLabel::Alpha(alphas()[1].clone()),
        WeylLabel::Zero,
        WeylLabel::Infinity,
    ];
    let fam = weyl_family(&labels, -6, 6).unwrap();
    let weyl = species_of(&fam).unwrap();
    let weyl_ok = uc_check(&weyl).is_none();
    let pattern = |p: QuiverPresentation| {
        let s = species_of(&SimpleFamily::nodes(&Arc::new(p))).unwrap();
        uc_check(&s).map(|v| v.pattern)
    };
    let kron = pattern(QuiverPresentation::kronecker());
    let out = pattern(QuiverPresentation::fan_out());
    let inn = pattern(QuiverPresentation::fan_in());
    Outcome {
        ok: weyl_ok
            && kron == Some(UcPattern::DoubleArrow)
            && out == Some(UcPattern::FanOut)
            && inn == Some(UcPattern::FanIn),
        detail: format!(
            "Weyl species ({} simples) uniserial: {}; Kronecker {:?}, fan-out {:?}, fan-in {:?}",
            weyl.len(),
            weyl_ok,
            kron,
            out,
            inn
        ),
    }
}

// ---- criterion 4 --------------------------------------------------------

fn criterion_4() -> Outcome {
    let ce1 = counterexample_double_arrow().unwrap();
    let ce1_ok = is_indecomposable(&ce1.object).unwrap().0
        && is_uniserial(&ce1.object, &ce1.simples).unwrap().is_none()
        && socle(&ce1.object, &ce1.simples).unwrap().is_simple();

    let ce2 = counterexample_fan_out().unwrap();
    let soc = socle(&ce2.object, &ce2.simples).unwrap();
    let minimal = soc.multiplicities.iter().filter(|&&m| m == 1).count();
    let ce2_ok = is_indecomposable(&ce2.object).unwrap().0
        && ce2.object.total_dim() == 3
        && soc.length() == 2
        && minimal == 2;

    let ce3 = counterexample_fan_in().unwrap();
    let chains = match enumerate_composition_series(&ce3.object, &ce3.simples).unwrap() {
        SeriesEnumeration::Finite(c) => c.len(),
        SeriesEnumeration::Infinite => usize::MAX,
    };
    let ce3_ok = is_indecomposable(&ce3.object).unwrap().0
        && is_uniserial(&ce3.object, &ce3.simples).unwrap().is_none()
        && chains == 2;
    Outcome {
        ok: ce1_ok && ce2_ok && ce3_ok,
        detail: format!(
            "double arrow: {}, fan-out: {} (socle {:?}), fan-in: {} ({} series)",
            ce1_ok, ce2_ok, soc.multiplicities, ce3_ok, chains
        ),
    }
}

// ---- criteria 5 and 9 ---------------------------------------------------

fn theorem(enlarge: i64) -> VerifyReport {
    verify_theorem(4, &alphas(), None, 2, enlarge).unwrap()
}

fn theorem_outcome(r: &VerifyReport) -> Outcome {
    let f = r.failures();
    Outcome {
        ok: r.passed() && r.entries.len() == 16,
        detail: if f.is_empty() {
            format!("{} keys, windows up to {:?}", r.entries.len(), r.entries.last().map(|e| e.window))
        } else {
            f.join("; ")
        },
    }
}

fn verdicts(r: &VerifyReport) -> Vec<(String, bool, usize, bool, bool)> {
    r.entries
        .iter()
        .map(|e| (e.key.to_string(), e.passed(), e.classes, e.isomorphic, e.uniserial))
        .collect()
}

// ---- criterion 6 --------------------------------------------------------

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for a in alphas() {
        let label = WeylLabel::Alpha(a.clone());
        for n in [2u32, 3] {
            let (lo, hi) = (-(n as i64 + 4), n as i64 + 4);
            let fam = weyl_family(std::slice::from_ref(&label), lo, hi).unwrap();
            let (xi, tag) = euler_sequence_class(&a, n, lo, hi, &fam).unwrap();
            let good = !xi.is_zero() && tag.to_string() == format!("M_{{{}}}[0]", a);
            ok &= good;
            parts.push(format!("M({},{}) {}", a, n, if good { "nonsplit" } else { "SPLIT" }));
        }
    }
    Outcome {
        ok,
        detail: parts.join(", "),
    }
}

// ---- criteria 7 and 8 ---------------------------------------------------

struct Backend {
    name: &'static str,
    species: Species,
    family: SimpleFamily,
}

fn backends() -> Vec<Backend> {
    let quiver = |name, p: QuiverPresentation| {
        let family = SimpleFamily::nodes(&Arc::new(p));
        Backend {
            name,
            species: species_of(&family).unwrap(),
            family,
        }
    };
    let labels = vec![WeylLabel::Alpha(Scalar::ratio(1, 2)), WeylLabel::Zero, WeylLabel::Infinity];
    let family = weyl_family(&labels, -7, 7).unwrap();
    vec![
        quiver("A3", QuiverPresentation::linear(3)),
        quiver("x^3 = 0", QuiverPresentation::truncated_loop(3)),
        Backend {
            name: "Weyl",
            species: species_of(&family).unwrap(),
            family,
        },
    ]
}

fn pool(b: &Backend, max_len: usize) -> Vec<IteratedExtension> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for c in classify(&b.species, &b.family, n, None).unwrap() {
            out.push(IteratedExtension::from_realization(&c.realization));
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut done = BTreeMap::new();
    let mut bad = Vec::new();
    let all = backends();
    // A3 and the Weyl window; five pairs each
    for b in [&all[0], &all[2]] {
        let p = pool(b, 2);
        for _ in 0..5 {
            let e1 = &p[rng.gen_range(0..p.len())];
            let e2 = &p[rng.gen_range(0..p.len())];
            let space = ext1(e2.object(), e1.object()).unwrap();
            let coords: Vec<Scalar> = (0..space.dim()).map(|_| Scalar::from_int(rng.gen_range(-2..=2))).collect();
            let xi = space.from_coordinates(&coords).unwrap();
            let ses = realize_extension(&xi).unwrap();
            let s = splice(&b.family, e1, e2, &ses.inj, &ses.surj).unwrap();
            let mut want: Vec<usize> = e1.order().iter().chain(e2.order()).copied().collect();
            want.sort();
            let mut got = composition_series(s.object(), &b.family).unwrap().factors;
            got.sort();
            let prefix_ok = s.order()[..e2.length()] == *e2.order() && s.order()[e2.length()..] == *e1.order();
            if s.length() != e1.length() + e2.length() || got != want || !prefix_ok {
                bad.push(format!("{}: {:?} + {:?}", b.name, e1.order(), e2.order()));
            }
            *done.entry(b.name).or_insert(0) += 1;
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("pairs per backend {:?}", done)
        } else {
            bad.join("; ")
        },
    }
}

fn criterion_8() -> Outcome {
    let mut checked = BTreeMap::new();
    let mut bad = Vec::new();
    for b in backends() {
        for e in pool(&b, 3) {
            let d = to_deformation(&e, &b.family).unwrap();
            let back = from_deformation(&d, &b.family).unwrap();
            let iso = are_isomorphic(back.object(), e.object()).unwrap();
            let n = e.length();
            let nilpotent = d.algebra.radical_power_dims().get(n - 1) == Some(&0)
                || (n == 1 && d.algebra.radical_power_dims()[0] == 0);
            if !(iso && back.order() == e.order() && d.is_flat() && nilpotent) {
                bad.push(format!("{}: {:?}", b.name, e.order()));
            }
            *checked.entry(b.name).or_insert(0) += 1;
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("round trips {:?}", checked)
        } else {
            bad.join("; ")
        },
    }
}

fn main() {
    let mut all = Vec::new();
    all.push(run(1, "Weyl relations against the rewriting oracle", Duration::from_secs(1), criterion_1).0);

    let mut base_table = Vec::new();
    let (ok, t2) = run(2, "graded Ext table on [-8, 8]", Duration::from_secs(10), || {
        base_table = ext_table(-8, 8);
        table_outcome(&base_table)
    });
    all.push(ok);
    all.push(run(3, "(UC) checker", Duration::from_secs(1), criterion_3).0);
    all.push(run(4, "counterexample suite", Duration::from_secs(5), criterion_4).0);
    let mut base_report = None;
    let (ok, t5) = run(5, "classification against the catalog, n <= 4", Duration::from_secs(60), || {
        let r = theorem(0);
        let o = theorem_outcome(&r);
        base_report = Some(r);
        o
    });
    all.push(ok);
    all.push(run(6, "non-splitness of the Euler sequences", Duration::from_secs(5), criterion_6).0);
    all.push(run(7, "splicing", Duration::from_secs(5), criterion_7).0);
    all.push(run(8, "deformation round trip", Duration::from_secs(30), criterion_8).0);
    all.push(
        run(9, "window stability (+2 each side)", (t2 + t5) * 2, || {
            let table = ext_table(-10, 10);
            let same_table = table == base_table;
            let report = theorem(2);
            let same_report = base_report.as_ref().map(verdicts) == Some(verdicts(&report));
            Outcome {
                ok: same_table && same_report,
                detail: format!("Ext table unchanged: {}, classification verdicts unchanged: {}", same_table, same_report),
            }
        })
        .0,
    );
    let passed = all.iter().filter(|&&b| b).count();
    println!("{}/{} criteria passed", passed, all.len());
    if passed != all.len() {
        std::process::exit(1);
    }
}
