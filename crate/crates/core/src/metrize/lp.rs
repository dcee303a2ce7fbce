//! Exact rational linear feasibility: Gaussian substitution for equalities
//! followed by a dense Phase-I simplex with Bland's anti-cycling rule.
//!
//! Systems are tiny (at most a few hundred rows over a few dozen variables),
//! so a dense tableau over `BigRational` is both simple and fast enough.

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

fn zero() -> BigRational {
    BigRational::zero()
}

fn one() -> BigRational {
    BigRational::one()
}

/// `sum_v coeffs[v] * x[v] >= rhs`
#[derive(Debug, Clone)]
pub struct Row {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

/// Expression of every original variable as an affine function of the free
/// variables surviving equality elimination.
struct Substitution {
    num_free: usize,
    free_vars: Vec<usize>,
    // per original variable: coefficients over free vars plus a constant
    exprs: Vec<(Vec<BigRational>, BigRational)>,
}

/// Eliminate the homogeneous equalities `x[a] = x[b] + x[c]` by Gaussian
/// reduction, expressing pivot variables over the surviving free ones.
fn eliminate_equalities(
    num_vars: usize,
    equalities: &[(usize, usize, usize)],
) -> Result<Substitution> {
    // rows over num_vars columns with rhs 0: x_a - x_b - x_c = 0
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::with_capacity(equalities.len());
    for &(a, b, c) in equalities {
        let mut r = vec![zero(); num_vars];
        r[a] += one();
        r[b] -= one();
        r[c] -= one();
        rows.push((r, zero()));
    }
    // reduced row echelon form
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; num_vars];
    let mut next_row = 0;
    for col in 0..num_vars {
        let Some(pr) = (next_row..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pr);
        let inv = rows[next_row].0[col].clone();
        for v in rows[next_row].0.iter_mut() {
            *v = &*v / &inv;
        }
        rows[next_row].1 = &rows[next_row].1 / &inv;
        for r in 0..rows.len() {
            if r != next_row && !rows[r].0[col].is_zero() {
                let factor = rows[r].0[col].clone();
                for v in 0..num_vars {
                    let delta = &factor * &rows[next_row].0[v];
                    rows[r].0[v] = &rows[r].0[v] - &delta;
                }
                let rhs_delta = &factor * &rows[next_row].1;
                rows[r].1 = &rows[r].1 - &rhs_delta;
            }
        }
        pivot_of_col[col] = Some(next_row);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    // rows below next_row are all-zero on coefficients; a nonzero rhs there
    // would mean the equality subsystem is contradictory
    for (coeffs, rhs) in rows.iter().skip(next_row) {
        debug_assert!(coeffs.iter().all(|v| v.is_zero()));
        if !rhs.is_zero() {
            return Err(Error::InconsistentEqualities);
        }
    }
    let free_vars: Vec<usize> = (0..num_vars).filter(|&v| pivot_of_col[v].is_none()).collect();
    let free_index: Vec<Option<usize>> = {
        let mut idx = vec![None; num_vars];
        for (i, &f) in free_vars.iter().enumerate() {
            idx[f] = Some(i);
        }
        idx
    };
    let mut exprs = Vec::with_capacity(num_vars);
    for v in 0..num_vars {
        match pivot_of_col[v] {
            None => {
                let mut coeffs = vec![zero(); free_vars.len()];
                coeffs[free_index[v].unwrap()] = one();
                exprs.push((coeffs, zero()));
            }
            Some(r) => {
                // x_v + sum_f row[f] x_f = rhs  =>  x_v = rhs - sum row[f] x_f
                let mut coeffs = vec![zero(); free_vars.len()];
                for (f, &fv) in free_vars.iter().enumerate() {
                    coeffs[f] = -rows[r].0[fv].clone();
                }
                exprs.push((coeffs, rows[r].1.clone()));
            }
        }
    }
    Ok(Substitution {
        num_free: free_vars.len(),
        free_vars,
        exprs,
    })
}

/// Feasibility of `x[a] = x[b] + x[c]` equalities, `x[b] + x[c] - x[a] >= 1`
/// slack inequalities and `x[v] >= 1` bounds for every variable. Returns an
/// exact satisfying assignment or `None` when the system is infeasible.
pub fn solve(
    num_vars: usize,
    equalities: &[(usize, usize, usize)],
    slacks: &[(usize, usize, usize)],
) -> Result<Option<Vec<BigRational>>> {
    let sub = eliminate_equalities(num_vars, equalities)?;
    // Shift every free variable by its lower bound: x_f = 1 + g_f, g_f >= 0.
    // An original row sum_v c_v x_v >= r becomes a row over g.
    let shift_row = |coeffs_over_vars: &[(usize, BigRational)], rhs: BigRational| -> Row {
        let mut g = vec![zero(); sub.num_free];
        let mut constant = zero();
        for (v, c) in coeffs_over_vars {
            let (expr, expr_const) = &sub.exprs[*v];
            for f in 0..sub.num_free {
                if !expr[f].is_zero() {
                    let delta = c * &expr[f];
                    g[f] = &g[f] + &delta;
                    // x_f = 1 + g_f contributes the coefficient once more
                    constant = &constant + &delta;
                }
            }
            constant = &constant + &(c * expr_const);
        }
        Row {
            coeffs: g,
            rhs: &rhs - &constant,
        }
    };
    let mut rows: Vec<Row> = Vec::new();
    for &(a, b, c) in slacks {
        rows.push(shift_row(
            &[(b, one()), (c, one()), (a, -one())],
            one(),
        ));
    }
    // bounds for eliminated variables; free-variable bounds are the g >= 0
    // sign conditions
    let free_set: Vec<bool> = {
        let mut s = vec![false; num_vars];
        for &f in &sub.free_vars {
            s[f] = true;
        }
        s
    };
    for v in 0..num_vars {
        if !free_set[v] {
            rows.push(shift_row(&[(v, one())], one()));
        }
    }
    // drop rows that are trivially satisfied for all g >= 0
    rows.retain(|r| !(r.rhs <= zero() && r.coeffs.iter().all(|c| !c.is_negative())));
    for r in &rows {
        if r.coeffs.iter().all(|c| c.is_zero()) && r.rhs > zero() {
            return Ok(None);
        }
    }
    let Some(g) = phase_one(sub.num_free, &rows) else {
        return Ok(None);
    };
    // x_v = expr_v(g + 1)
    let mut x = Vec::with_capacity(num_vars);
    for v in 0..num_vars {
        let (expr, expr_const) = &sub.exprs[v];
        let mut val = expr_const.clone();
        for f in 0..sub.num_free {
            if !expr[f].is_zero() {
                let gf = &g[f] + one();
                val = &val + &(&expr[f] * &gf);
            }
        }
        x.push(val);
    }
    debug_assert!(check_assignment(&x, equalities, slacks));
    Ok(Some(x))
}

fn check_assignment(
    x: &[BigRational],
    equalities: &[(usize, usize, usize)],
    slacks: &[(usize, usize, usize)],
) -> bool {
    x.iter().all(|v| *v >= one())
        && equalities.iter().all(|&(a, b, c)| x[a] == &x[b] + &x[c])
        && slacks
            .iter()
            .all(|&(a, b, c)| &(&x[b] + &x[c]) - &x[a] >= one())
}

/// Phase-I simplex for `A g >= b, g >= 0`. Returns a feasible `g` or `None`.
fn phase_one(num_g: usize, rows: &[Row]) -> Option<Vec<BigRational>> {
    let num_rows = rows.len();
    if num_rows == 0 {
        return Some(vec![zero(); num_g]);
    }
    // columns: g vars, then one surplus per row, then artificials for rows
    // with positive rhs
    let art_rows: Vec<usize> = (0..num_rows).filter(|&r| rows[r].rhs > zero()).collect();
    let num_cols = num_g + num_rows + art_rows.len();
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(num_rows);
    let mut basis: Vec<usize> = Vec::with_capacity(num_rows);
    let mut art_col_of_row = vec![usize::MAX; num_rows];
    for (k, &r) in art_rows.iter().enumerate() {
        art_col_of_row[r] = num_g + num_rows + k;
    }
    for (r, row) in rows.iter().enumerate() {
        let mut t = vec![zero(); num_cols + 1];
        let positive = row.rhs > zero();
        // A_r g - s_r (+ a_r) = b_r, flipped when b_r <= 0 so the basic
        // variable starts at a nonnegative value
        let sign = if positive { one() } else { -one() };
        for (j, c) in row.coeffs.iter().enumerate() {
            t[j] = c * &sign;
        }
        t[num_g + r] = -&sign;
        t[num_cols] = &row.rhs * &sign;
        if positive {
            t[art_col_of_row[r]] = one();
            basis.push(art_col_of_row[r]);
        } else {
            basis.push(num_g + r);
        }
        tab.push(t);
    }
    // objective: minimize sum of artificials; reduced-cost row starts as the
    // sum of the artificial rows (cost 1 on their basic columns)
    let mut obj = vec![zero(); num_cols + 1];
    for &r in &art_rows {
        for j in 0..=num_cols {
            obj[j] = &obj[j] + &tab[r][j];
        }
    }
    for k in 0..art_rows.len() {
        obj[num_g + num_rows + k] = zero();
    }
    let is_artificial = |j: usize| j >= num_g + num_rows;
    loop {
        // Bland: entering column is the smallest with positive reduced cost
        let entering = (0..num_cols).find(|&j| !is_artificial(j) && obj[j] > zero());
        let Some(e) = entering else { break };
        // ratio test over rows with positive pivot coefficient
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for r in 0..num_rows {
            if tab[r][e] > zero() {
                let ratio = &tab[r][num_cols] / &tab[r][e];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(l) = leave else {
            // unbounded direction in phase one cannot happen with the
            // objective bounded below by zero, but guard anyway
            return None;
        };
        pivot(&mut tab, &mut obj, l, e, num_cols);
        basis[l] = e;
    }
    if !obj[num_cols].is_zero() {
        return None;
    }
    let mut g = vec![zero(); num_g];
    for (r, &bv) in basis.iter().enumerate() {
        if bv < num_g {
            g[bv] = tab[r][num_cols].clone();
        }
    }
    Some(g)
}

fn pivot(
    tab: &mut [Vec<BigRational>],
    obj: &mut [BigRational],
    l: usize,
    e: usize,
    num_cols: usize,
) {
    let inv = tab[l][e].clone();
    for j in 0..=num_cols {
        tab[l][j] = &tab[l][j] / &inv;
    }
    for r in 0..tab.len() {
        if r != l && !tab[r][e].is_zero() {
            let factor = tab[r][e].clone();
            for j in 0..=num_cols {
                let delta = &factor * &tab[l][j];
                tab[r][j] = &tab[r][j] - &delta;
            }
        }
    }
    if !obj[e].is_zero() {
        let factor = obj[e].clone();
        for j in 0..=num_cols {
            let delta = &factor * &tab[l][j];
            obj[j] = &obj[j] - &delta;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;
    use rand::Rng;
    use rand::SeedableRng;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn single_variable_bound_only() {
        let x = solve(1, &[], &[]).unwrap().unwrap();
        assert!(x[0] >= one());
    }

    #[test]
    fn forced_zero_is_infeasible() {
        // x0 = x1 + x2, x1 = x0 + x2 forces x2 = 0 against its bound
        let out = solve(3, &[(0, 1, 2), (1, 0, 2)], &[]).unwrap();
        assert!(out.is_none());
    }

    #[test]
    fn chain_of_equalities() {
        // x0 = x1 + x2, x3 = x0 + x4 with slacks on an unrelated triple
        let x = solve(6, &[(0, 1, 2), (3, 0, 4)], &[(5, 1, 4)])
            .unwrap()
            .unwrap();
        assert_eq!(x[0], &x[1] + &x[2]);
        assert_eq!(x[3], &x[0] + &x[4]);
        assert!(&(&x[1] + &x[4]) - &x[5] >= one());
    }

    #[test]
    fn slack_conflict_with_equality() {
        // x0 = x1 + x2 but also require x1 + x2 - x0 >= 1
        let out = solve(3, &[(0, 1, 2)], &[(0, 1, 2)]).unwrap();
        assert!(out.is_none());
    }

    /// Fourier-Motzkin elimination over `A g >= b, g >= 0`; exponential but
    /// fine as an independent oracle on tiny systems.
    fn fm_feasible(num_g: usize, rows: &[Row]) -> bool {
        let mut sys: Vec<(Vec<BigRational>, BigRational)> = rows
            .iter()
            .map(|r| (r.coeffs.clone(), r.rhs.clone()))
            .collect();
        for v in 0..num_g {
            let mut e = vec![zero(); num_g];
            e[v] = one();
            sys.push((e, zero()));
        }
        for v in 0..num_g {
            let mut next: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
            let (pos, rest): (Vec<_>, Vec<_>) =
                sys.into_iter().partition(|(c, _)| c[v] > zero());
            let (neg, zero_rows): (Vec<_>, Vec<_>) =
                rest.into_iter().partition(|(c, _)| c[v] < zero());
            next.extend(zero_rows);
            for (pc, pr) in &pos {
                for (nc, nr) in &neg {
                    // scale so the v coefficients cancel
                    let a = pc[v].clone();
                    let b = -nc[v].clone();
                    let mut c = vec![zero(); num_g];
                    for j in 0..num_g {
                        c[j] = &(&pc[j] * &b) + &(&nc[j] * &a);
                    }
                    let r = &(pr * &b) + &(nr * &a);
                    next.push((c, r));
                }
            }
            sys = next;
        }
        sys.iter().all(|(_, r)| *r <= zero())
    }

    #[test]
    fn simplex_matches_fourier_motzkin_on_random_systems() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut feasible_seen = 0;
        let mut infeasible_seen = 0;
        for _ in 0..300 {
            let num_g = rng.gen_range(1..=4);
            let num_rows = rng.gen_range(1..=6);
            let rows: Vec<Row> = (0..num_rows)
                .map(|_| Row {
                    coeffs: (0..num_g)
                        .map(|_| rat(rng.gen_range(-3i64..=3), 1))
                        .collect(),
                    rhs: rat(rng.gen_range(-4i64..=4), 1),
                })
                .collect();
            let got = phase_one(num_g, &rows);
            let want = fm_feasible(num_g, &rows);
            assert_eq!(got.is_some(), want);
            if let Some(g) = got {
                feasible_seen += 1;
                for r in &rows {
                    let lhs: BigRational = r
                        .coeffs
                        .iter()
                        .zip(&g)
                        .map(|(c, v)| c * v)
                        .fold(zero(), |acc, t| &acc + &t);
                    assert!(lhs >= r.rhs);
                }
                assert!(g.iter().all(|v| !v.is_negative()));
            } else {
                infeasible_seen += 1;
            }
        }
        assert!(feasible_seen > 20 && infeasible_seen > 20);
    }
}
