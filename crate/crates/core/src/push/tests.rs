use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::algebra::{exp_series, frac, rat, Poly, RatFun, Var};
use crate::error::Error;
use crate::locus::inverse_normal_euler;
use crate::rng::Lcg;
use crate::tableau::tests::census;
use crate::tableau::{component_dimension, enumerate_tableaux, BlockData, FlagSpec, Tableau};

fn v(k: usize) -> Var {
    Var::root(1, 1, k)
}

fn y(k: usize) -> Poly {
    Poly::var(v(k))
}

fn two_letters() -> BlockAlphabet {
    BlockAlphabet::new(vec![vec![v(1)], vec![v(2)]]).unwrap()
}

fn grass(n: usize, r: usize) -> Tableau {
    Tableau::zero(&FlagSpec::grassmannian(n, r, 0).unwrap()).unwrap()
}

/// Sum of level-`i` roots with the sign of the hyperplane class.
fn hyperplane(t: &Tableau, i: usize) -> Poly {
    let b = BlockData::of(t);
    let mut h = Poly::zero();
    for j in 1..=b.k(i) {
        for k in 1..=b.m(i, j) {
            h = &h - &Poly::var(Var::root(i, j, k));
        }
    }
    h
}

fn elementary(k: usize, vars: &[Var]) -> Poly {
    let mut e = vec![Poly::one()];
    for &x in vars {
        let mut next = e.clone();
        next.push(Poly::zero());
        for d in 1..next.len() {
            next[d] = &e.get(d).cloned().unwrap_or_else(Poly::zero) + &(&Poly::var(x) * &e[d - 1]);
        }
        e = next;
    }
    e.get(k).cloned().unwrap_or_else(Poly::zero)
}

/// Random polynomial of degree ≤ `deg`, symmetric within each group.
fn random_symmetric(g: &mut Lcg, groups: &[Vec<Var>], deg: u32, extra: &[Var]) -> Poly {
    let mut out = Poly::zero();
    for _ in 0..3 {
        let mut term = Poly::int(g.below(7) as i64 - 3);
        let mut d = 0;
        while d < deg && g.below(4) != 0 {
            let grp = &groups[g.below(groups.len() as u64) as usize];
            let k = 1 + g.below(grp.len() as u64) as usize;
            if d + k as u32 > deg {
                break;
            }
            term = &term * &elementary(k, grp);
            d += k as u32;
        }
        if !extra.is_empty() && g.below(2) == 0 {
            term = &term * &Poly::var(extra[g.below(extra.len() as u64) as usize]);
        }
        out = &out + &term;
    }
    out
}

#[test]
fn omega_examples() {
    let q = |k: u8| Poly::var(Var::TorusWeight(k));
    let one = OmegaSpec { constraints: vec![(vec![v(1)], vec![q(1)])] };
    assert_eq!(omega_class(&one), &q(1) - &y(1));
    let two = OmegaSpec { constraints: vec![(vec![v(1)], vec![q(1), q(2)])] };
    assert_eq!(omega_class(&two), &(&q(1) - &y(1)) * &(&q(2) - &y(1)));
    let spec = OmegaSpec { constraints: vec![(vec![v(1)], vec![q(1), q(2)]), (vec![v(2)], vec![q(3)])] };
    assert_eq!(spec.degree(), 3);
    assert_eq!(omega_class(&spec).total_degree(), Some(3));
}

#[test]
fn brion_examples() {
    let a = two_letters();
    let b = DEFAULT_COSET_BUDGET;
    assert_eq!(brion_pushforward(&RatFun::one(), &a, b).unwrap(), RatFun::zero());
    assert_eq!(brion_pushforward(&y(1).into(), &a, b).unwrap(), RatFun::int(-1));
    assert_eq!(brion_pushforward(&y(1).pow(2).into(), &a, b).unwrap(), RatFun::from_poly(-(&y(1) + &y(2))));
    let q = Poly::var(Var::TorusWeight(1));
    assert_eq!(restrictive_pushforward(&RatFun::one(), &a, &(&q - &y(1)), b).unwrap(), RatFun::one());
}

#[test]
fn brion_guards() {
    let big = BlockAlphabet::new((1..=8).map(|k| vec![v(k)]).collect()).unwrap();
    assert_eq!(big.coset_count(), 40320);
    assert!(matches!(
        brion_pushforward(&RatFun::one(), &big, DEFAULT_COSET_BUDGET),
        Err(Error::BudgetExceeded { cosets: 40320, budget: 10080 })
    ));
    let a = BlockAlphabet::new(vec![vec![v(1), v(2)], vec![v(3)]]).unwrap();
    assert!(matches!(
        brion_pushforward(&y(1).into(), &a, DEFAULT_COSET_BUDGET),
        Err(Error::SymmetryViolation(_))
    ));
    assert!(BlockAlphabet::new(vec![vec![v(1)], vec![v(1)]]).is_err());
}

#[test]
fn coset_counts() {
    let a = BlockAlphabet::new(vec![vec![v(1), v(2)], vec![v(3)], vec![v(4), v(5), v(6)]]).unwrap();
    assert_eq!(a.coset_count(), 60);
    assert_eq!(a.fiber_dimension(), 2 + 6 + 3);
}

fn sample_alphabets() -> Vec<BlockAlphabet> {
    let shapes: [&[usize]; 5] = [&[1, 1], &[1, 2], &[2, 1], &[1, 1, 1], &[2, 2]];
    shapes
        .iter()
        .map(|sizes| {
            let mut next = 1;
            let blocks = sizes
                .iter()
                .map(|&m| {
                    let b: Vec<Var> = (next..next + m).map(v).collect();
                    next += m;
                    b
                })
                .collect();
            BlockAlphabet::new(blocks).unwrap()
        })
        .collect()
}

#[test]
fn pushforward_degree_rules() {
    let mut g = Lcg::new(11);
    for a in sample_alphabets() {
        let dim = a.fiber_dimension() as u32;
        for _ in 0..4 {
            let p = random_symmetric(&mut g, a.blocks(), dim, &[]);
            let top = p.part_of_degree(|x| x.is_root(), dim);
            let below = &p - &top;
            let r = brion_pushforward(&below.into(), &a, DEFAULT_COSET_BUDGET).unwrap();
            assert!(r.is_zero());
            let r = brion_pushforward(&top.into(), &a, DEFAULT_COSET_BUDGET).unwrap();
            assert!(r.as_constant().is_some(), "{}", r);
        }
    }
}

#[test]
fn unrestricted_pushforward_matches_brion() {
    let mut g = Lcg::new(5);
    let alphabets = sample_alphabets();
    for case in 0..20 {
        let a = &alphabets[case % alphabets.len()];
        let p: RatFun = random_symmetric(&mut g, a.blocks(), 4, &[Var::Alpha]).into();
        assert_eq!(
            restrictive_pushforward(&p, a, &Poly::one(), DEFAULT_COSET_BUDGET).unwrap(),
            brion_pushforward(&p, a, DEFAULT_COSET_BUDGET).unwrap()
        );
    }
}

#[test]
fn restrictive_degree_bookkeeping() {
    let mut g = Lcg::new(9);
    let q1 = Poly::var(Var::TorusWeight(1));
    let q2 = Poly::var(Var::TorusWeight(2));
    for a in sample_alphabets() {
        let dim = a.fiber_dimension() as u32;
        let first = a.blocks()[0].clone();
        let omega = omega_class(&OmegaSpec { constraints: vec![(first, vec![q1.clone(), q2.clone()])] });
        let od = omega.total_degree().unwrap();
        for _ in 0..3 {
            let p = random_symmetric(&mut g, a.blocks(), dim, &[]);
            let deg = (0..=dim).rev().find(|&d| !p.part_of_degree(|_| true, d).is_zero());
            let Some(deg) = deg else { continue };
            let hom = p.part_of_degree(|_| true, deg);
            let r = restrictive_pushforward(&hom.into(), &a, &omega, DEFAULT_COSET_BUDGET).unwrap();
            if r.is_zero() {
                continue;
            }
            let r = r.as_poly().unwrap().clone();
            assert!(deg + od >= dim);
            assert_eq!(r.total_degree(), Some(deg + od - dim));
            assert_eq!(r.part_of_degree(|_| true, deg + od - dim), r);
        }
    }
}

#[test]
fn projection_formula() {
    let mut g = Lcg::new(3);
    for a in sample_alphabets() {
        let letters = a.letters();
        for _ in 0..3 {
            let phi = random_symmetric(&mut g, a.blocks(), 3, &[Var::Alpha]);
            let psi = random_symmetric(&mut g, &[letters.clone()], 2, &[Var::Alpha]);
            let lhs = brion_pushforward(&(&phi * &psi).into(), &a, DEFAULT_COSET_BUDGET).unwrap();
            let rhs = brion_pushforward(&phi.into(), &a, DEFAULT_COSET_BUDGET).unwrap().mul_poly(&psi);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn rational_presentation_of_omega() {
    // E = P_1 ⊕ (quotient); roots of E are those of P_1 followed by the q's
    let mut g = Lcg::new(21);
    for _ in 0..20 {
        let mut pt = || frac(g.below(41) as i64 - 20, 1 + g.below(3) as i64);
        let ys = [pt(), pt()];
        let ps = [pt(), pt()];
        let qs = [pt(), pt(), pt()];
        let omega = omega_class(&OmegaSpec {
            constraints: vec![(vec![v(1), v(2)], qs.iter().map(|q| Poly::constant(q.clone())).collect())],
        });
        let map: BTreeMap<Var, Poly> = [(v(1), Poly::constant(ys[0].clone())), (v(2), Poly::constant(ys[1].clone()))].into();
        let direct = omega.substitute(&map);
        let mut num = rat(1);
        let mut den = rat(1);
        for yv in &ys {
            for e in ps.iter().chain(qs.iter()) {
                num *= e - yv;
            }
            for p in &ps {
                den *= p - yv;
            }
        }
        if den == rat(0) {
            continue;
        }
        assert_eq!(direct.as_constant().unwrap(), num / den);
    }
}

#[test]
fn tower_examples() {
    let t = Poly::var(Var::kahler(1));
    let p1 = grass(2, 1);
    let h = hyperplane(&p1, 1);
    let got = integrate_over_component(&p1, &(&Poly::one() + &(&h * &t)).into(), DEFAULT_COSET_BUDGET).unwrap();
    assert_eq!(got, RatFun::from_poly(t.clone()));

    let p2 = grass(3, 1);
    let e = exp_series(&(&hyperplane(&p2, 1) * &t), 2);
    let got = integrate_over_component(&p2, &e.into(), DEFAULT_COSET_BUDGET).unwrap();
    assert_eq!(got, RatFun::from_poly(t.pow(2).scale(&frac(1, 2))));

    let low = hyperplane(&p2, 1);
    assert!(integrate_over_component(&p2, &low.into(), DEFAULT_COSET_BUDGET).unwrap().is_zero());
}

#[test]
fn tower_rejects_foreign_roots() {
    let p1 = grass(2, 1);
    let stray = RatFun::from_poly(&Poly::var(Var::root(2, 1, 1)) * &y(1));
    assert!(matches!(
        integrate_over_component(&p1, &stray, DEFAULT_COSET_BUDGET),
        Err(Error::IntegrationShape(_))
    ));
}

#[test]
fn oracle_examples() {
    let p2 = grass(3, 1);
    let h2 = hyperplane(&p2, 1).pow(2);
    assert_eq!(ab_integrate(&p2, &h2.into(), 0).unwrap(), RatFun::one());
    let g24 = grass(4, 2);
    let c2 = &Poly::var(Var::root(1, 1, 1)) * &Poly::var(Var::root(1, 1, 2));
    assert_eq!(ab_integrate(&g24, &c2.pow(2).into(), 0).unwrap(), RatFun::one());
    for t in [p2, g24] {
        assert!(ab_integrate(&t, &RatFun::one(), 0).unwrap().is_zero());
    }
}

/// Hand evaluation at λ = (0, 1, 2): Σ λ_i² / ∏_{j≠i} (λ_i − λ_j) = 1.
#[test]
fn projective_plane_identity_by_hand() {
    let lam = [rat(0), rat(1), rat(2)];
    let mut total = rat(0);
    for i in 0..3 {
        let mut den = rat(1);
        for j in 0..3 {
            if j != i {
                den *= &lam[i] - &lam[j];
            }
        }
        total += &lam[i] * &lam[i] / den;
    }
    assert_eq!(total, rat(1));
}

#[test]
fn schur_examples() {
    let r = [v(1), v(2)];
    assert_eq!(schur_polynomial(&[1], &r), &y(1) + &y(2));
    assert_eq!(schur_polynomial(&[1, 1], &r), &y(1) * &y(2));
    assert_eq!(schur_polynomial(&[2], &r), &(&y(1).pow(2) + &(&y(1) * &y(2))) + &y(2).pow(2));
    assert!(schur_polynomial(&[1, 1, 1], &r).is_zero());
}

#[test]
fn schur_routes_agree() {
    for m in 1..=4 {
        let roots: Vec<Var> = (1..=m).map(v).collect();
        for mu in partitions_in_box(m, 3) {
            assert_eq!(schur_polynomial(&mu, &roots), schur_bialternant(&mu, &roots).unwrap(), "{:?}", mu);
        }
    }
}

#[test]
fn box_partitions() {
    assert_eq!(partitions_in_box(2, 2).len(), 6);
    assert_eq!(partitions_in_box(2, 2)[0], vec![0, 0]);
    assert_eq!(partitions_in_box(3, 2).len(), 10);
}

/// Integrand `(1/e(ν)) · f` with `f` block-symmetric of degree ≤ dim E.
fn oracle_integrand(t: &Tableau, g: &mut Lcg) -> RatFun {
    let b = BlockData::of(t);
    let mut groups = Vec::new();
    for i in 1..=b.levels() {
        for j in 1..=b.k(i) {
            groups.push((1..=b.m(i, j)).map(|k| Var::root(i, j, k)).collect::<Vec<_>>());
        }
    }
    let dim = component_dimension(t).unwrap() as u32;
    let f = random_symmetric(g, &groups, dim, &[Var::Alpha, Var::kahler(1)]);
    inverse_normal_euler(t).unwrap().mul_poly(&f)
}

#[test]
fn oracle_equivalence() {
    let mut g = Lcg::new(2024);
    for s in census(4, 3, 2) {
        for t in enumerate_tableaux(&s) {
            for _ in 0..2 {
                let p = oracle_integrand(&t, &mut g);
                let tower = integrate_tower_at(&p, &component_tower(&t).unwrap(), s.n(), 5, DEFAULT_COSET_BUDGET).unwrap();
                let oracle = ab_integrate(&t, &p, 1).unwrap();
                assert_eq!(tower, oracle, "{:?}", t.alpha());
            }
        }
    }
}

#[test]
fn oracle_is_weight_independent() {
    let mut g = Lcg::new(77);
    let specs = [FlagSpec::grassmannian(3, 1, 2).unwrap(), FlagSpec::new(3, vec![1, 2], vec![1, 1]).unwrap()];
    for s in specs {
        for t in enumerate_tableaux(&s) {
            let p = oracle_integrand(&t, &mut g);
            let first = ab_integrate(&t, &p, 0).unwrap();
            for seed in 1..5 {
                assert_eq!(ab_integrate(&t, &p, seed).unwrap(), first);
            }
        }
    }
}

#[test]
fn classical_integrals_by_both_routes() {
    let t = Poly::var(Var::kahler(1));
    for (n, r) in [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2)] {
        let x = grass(n, r);
        let dim = (r * (n - r)) as u32;
        let e = exp_series(&(&hyperplane(&x, 1) * &t), dim);
        let a = integrate_over_component(&x, &e.clone().into(), DEFAULT_COSET_BUDGET).unwrap();
        let b = ab_integrate(&x, &e.into(), 0).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn symbolic_tower_matches_nested_evaluation() {
    let mut g = Lcg::new(404);
    let mut specs = census(3, 2, 2);
    specs.extend(census(4, 2, 1));
    for s in specs {
        for t in enumerate_tableaux(&s) {
            let p = oracle_integrand(&t, &mut g);
            let symbolic = integrate_over_component(&t, &p, DEFAULT_COSET_BUDGET).unwrap();
            let tower = component_tower(&t).unwrap();
            if s.n() == 2 || s.total_degree() == 0 {
                // ambient roots kept formal until the end
                assert_eq!(integrate_to_point(&p, &tower, DEFAULT_COSET_BUDGET).unwrap(), symbolic);
            }
            let nested = integrate_tower_at(&p, &tower, s.n(), 0, DEFAULT_COSET_BUDGET).unwrap();
            assert_eq!(nested, symbolic, "{:?}", t.alpha());
        }
    }
}
