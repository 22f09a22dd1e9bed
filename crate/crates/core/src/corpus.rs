//! Bounded exhaustive corpora of orbit data and seeded random generators.

use num::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::linalg::{rational, ExactMatrix, Field, Scalar};
use crate::orbit::{
    project_to_p_star, Eigenvalue, EigenvalueClass, MirabolicOrbitDatum, OrbitDatum,
};
use crate::partition::Partition;
use crate::rep::{Factor, RepLabel};

pub const DEFAULT_SEED: u64 = 20240607;

fn single_eigenvalues() -> Vec<Eigenvalue> {
    [0, 1, -1, 2]
        .iter()
        .map(|&a| Eigenvalue::real(rational(a, 1)))
        .collect()
}

fn pair_eigenvalues() -> Vec<Eigenvalue> {
    let mut out = Vec::new();
    for a in [0, 1] {
        for (p, q) in [(1, 2), (1, 1), (3, 2)] {
            out.push(Eigenvalue::pair(rational(a, 1), rational(p, q)));
        }
    }
    out
}

/// Every orbit with `1 <= n <= nmax` whose eigenvalues come from the fixed
/// pool of the field: `{0, 1, -1, 2}`, and over R also the pairs `a ± ib`
/// with `a in {0, 1}` and `b in {1/2, 1, 3/2}`.
pub fn orbit_corpus(field: Field, nmax: usize) -> Vec<OrbitDatum> {
    let mut pool = single_eigenvalues();
    if field == Field::Real {
        pool.extend(pair_eigenvalues());
    }
    let mut out = Vec::new();
    collect(&pool, 0, nmax, &mut Vec::new(), field, &mut out);
    out.retain(|o| o.size() > 0);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

fn collect(
    pool: &[Eigenvalue],
    idx: usize,
    budget: usize,
    cur: &mut Vec<EigenvalueClass>,
    field: Field,
    out: &mut Vec<OrbitDatum>,
) {
    if idx == pool.len() {
        out.push(OrbitDatum::new(field, cur.clone()).expect("corpus data are valid"));
        return;
    }
    collect(pool, idx + 1, budget, cur, field, out);
    let w = pool[idx].multiplicity();
    for weight in 1..=budget / w {
        for p in Partition::all(weight) {
            cur.push(EigenvalueClass::new(pool[idx].clone(), p));
            collect(pool, idx + 1, budget - w * weight, cur, field, out);
            cur.pop();
        }
    }
}

/// Every normal form `(j, A)` with `j + |A| <= nmax`, `A` drawn from
/// [`orbit_corpus`] or empty.
pub fn normal_form_corpus(field: Field, nmax: usize) -> Vec<MirabolicOrbitDatum> {
    let mut a_parts = vec![OrbitDatum::empty(field)];
    a_parts.extend(orbit_corpus(field, nmax.saturating_sub(1)));
    let mut out = Vec::new();
    for a in a_parts {
        for j in 1..=nmax - a.size() {
            out.push(MirabolicOrbitDatum::new(j, a.clone()).expect("depth is positive"));
        }
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

/// Random element of P_n with small integer entries: the Levi part is
/// `L U D` with unit triangular `L`, `U` and a diagonal of `±1, ±2`.
pub fn random_p_element<R: Rng>(n: usize, rng: &mut R) -> ExactMatrix {
    let m = n.saturating_sub(1);
    let mut l = ExactMatrix::identity(m);
    let mut u = ExactMatrix::identity(m);
    let mut d = ExactMatrix::identity(m);
    for i in 0..m {
        for j in 0..i {
            l.set(i, j, Scalar::from_int(rng.gen_range(-2..=2)));
            u.set(j, i, Scalar::from_int(rng.gen_range(-2..=2)));
        }
        d.set(
            i,
            i,
            Scalar::from_int(*[-2, -1, 1, 2].choose(rng).expect("nonempty")),
        );
    }
    let a = &(&l * &u) * &d;
    let mut p = ExactMatrix::identity(n);
    p.set_block(0, 0, &a);
    for i in 0..m {
        p.set(i, n - 1, Scalar::from_int(rng.gen_range(-2..=2)));
    }
    p
}

/// `pr'(p x p^{-1})` for a random `p` in P_n.
pub fn random_conjugate<R: Rng>(x: &ExactMatrix, rng: &mut R) -> ExactMatrix {
    let p = random_p_element(x.rows(), rng);
    project_to_p_star(&x.conjugate_by(&p).expect("P elements are invertible"))
}

fn random_twist<R: Rng>(rng: &mut R) -> BigRational {
    let (p, q) = *[(-1, 1), (0, 1), (1, 2), (1, 1), (3, 1)]
        .choose(rng)
        .expect("nonempty");
    rational(p, q)
}

pub fn random_factor<R: Rng>(field: Field, rng: &mut R) -> Factor {
    let t = rng.gen_range(1..=3);
    let twist = random_twist(rng);
    let s = || -> BigRational {
        let (p, q) = [(1, 4), (1, 3), (2, 5)][t % 3];
        rational(p, q)
    };
    let m = rng.gen_range(1..=4);
    match (field, rng.gen_range(0..4)) {
        (Field::Complex, 0..=2) => Factor::CharC { t, twist },
        (Field::Complex, _) => Factor::Stein { t, s: s(), twist },
        (Field::Real, 0) => Factor::CharR {
            t,
            twist,
            w: rng.gen_range(0..=1),
        },
        (Field::Real, 1) => Factor::Speh { t, m, twist },
        (Field::Real, 2) => Factor::Stein { t, s: s(), twist },
        (Field::Real, _) => Factor::SpehCs {
            t,
            m,
            s: s(),
            twist,
        },
    }
}

/// Label with 0 to 4 random factors.
pub fn random_label<R: Rng>(field: Field, rng: &mut R) -> RepLabel {
    let k = rng.gen_range(0..=4);
    let factors = (0..k).map(|_| random_factor(field, rng)).collect();
    RepLabel::new(field, factors).expect("generated factors are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn corpus_sizes_are_bounded() {
        let c = orbit_corpus(Field::Complex, 2);
        // n = 1: four choices; n = 2: [2] or [1,1] at one of four, or two distinct singles
        assert_eq!(c.len(), 4 + 8 + 6);
        assert!(c.iter().all(|o| (1..=2).contains(&o.size())));
        let r = orbit_corpus(Field::Real, 2);
        assert_eq!(r.len(), 18 + 6);
    }

    #[test]
    fn normal_forms_cover_depths() {
        let c = normal_form_corpus(Field::Complex, 2);
        // (1, empty), (2, empty), and (1, A) for the four n = 1 orbits
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn random_p_elements_are_mirabolic() {
        let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        for n in 1..6 {
            let p = random_p_element(n, &mut rng);
            assert!(p.inverse().is_some());
            let last: Vec<Scalar> = p.row(n - 1).to_vec();
            let mut e = vec![Scalar::zero(); n];
            e[n - 1] = Scalar::one();
            assert_eq!(last, e);
        }
    }
}
