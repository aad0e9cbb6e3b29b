use super::PartialTripleSystem;

/// A line-preserving bijection `a -> b` as `map[x] = image of x`, if any.
///
/// Backtracking over degree-compatible images; every assignment forces the
/// images of all wedges with already-placed points.
pub fn pts_isomorphic(a: &PartialTripleSystem, b: &PartialTripleSystem) -> Option<Vec<usize>> {
    if a.n_points() != b.n_points() || a.lines().len() != b.lines().len() {
        return None;
    }
    let n = a.n_points();
    let deg_a: Vec<usize> = (0..n).map(|x| a.degree(x)).collect();
    let deg_b: Vec<usize> = (0..n).map(|x| b.degree(x)).collect();
    let mut da = deg_a.clone();
    let mut db = deg_b.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    let state = State {
        map: vec![None; n],
        inv: vec![None; n],
        placed: Vec::new(),
    };
    let ctx = Ctx { a, b, deg_a, deg_b };
    search(&ctx, state).map(|s| s.map.into_iter().map(Option::unwrap).collect())
}

struct Ctx<'g> {
    a: &'g PartialTripleSystem,
    b: &'g PartialTripleSystem,
    deg_a: Vec<usize>,
    deg_b: Vec<usize>,
}

#[derive(Clone)]
struct State {
    map: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    placed: Vec<usize>,
}

fn search(ctx: &Ctx<'_>, state: State) -> Option<State> {
    let n = state.map.len();
    // Prefer an unplaced point collinear with a placed one so propagation bites.
    let next = (0..n).filter(|&x| state.map[x].is_none()).max_by_key(|&x| {
        let linked = state.placed.iter().filter(|&&u| ctx.a.collinear(x, u)).count();
        (linked, usize::MAX - x)
    });
    let Some(x) = next else {
        return Some(state);
    };
    for y in 0..n {
        if state.inv[y].is_some() || ctx.deg_b[y] != ctx.deg_a[x] {
            continue;
        }
        let mut trial = state.clone();
        if assign(ctx, &mut trial, x, y) {
            if let Some(done) = search(ctx, trial) {
                return Some(done);
            }
        }
    }
    None
}

fn assign(ctx: &Ctx<'_>, st: &mut State, x: usize, y: usize) -> bool {
    let mut pending = vec![(x, y)];
    while let Some((x, y)) = pending.pop() {
        match (st.map[x], st.inv[y]) {
            (Some(fy), _) if fy == y => continue,
            (Some(_), _) | (_, Some(_)) => return false,
            _ => {}
        }
        if ctx.deg_a[x] != ctx.deg_b[y] {
            return false;
        }
        for &u in &st.placed {
            let v = st.map[u].expect("placed point has an image");
            let ca = ctx.a.collinear(x, u);
            if ca != ctx.b.collinear(y, v) {
                return false;
            }
            if ca {
                let wa = ctx.a.wedge(x, u).expect("collinear");
                let wb = ctx.b.wedge(y, v).expect("collinear");
                pending.push((wa, wb));
            }
        }
        st.map[x] = Some(y);
        st.inv[y] = Some(x);
        st.placed.push(x);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::{build_p2_dual, build_p3, validate_pts};
    use super::*;

    fn preserves_lines(a: &PartialTripleSystem, b: &PartialTripleSystem, map: &[usize]) -> bool {
        a.lines().iter().all(|l| {
            let mut img = l.map(|p| map[p]);
            img.sort_unstable();
            b.lines().contains(&img)
        })
    }

    #[test]
    fn self_and_relabelled() {
        let p = build_p3();
        let id = pts_isomorphic(&p, &p).unwrap();
        assert!(preserves_lines(&p, &p, &id));
        let perm = [4, 7, 1, 8, 0, 3, 6, 2, 5];
        let shuffled = validate_pts(9, p.lines().iter().map(|l| l.map(|x| perm[x]))).unwrap();
        let m = pts_isomorphic(&p, &shuffled).unwrap();
        assert!(preserves_lines(&p, &shuffled, &m));
    }

    #[test]
    fn distinguishes() {
        assert!(pts_isomorphic(&build_p2_dual(), &build_p3()).is_none());
        // Same counts, different incidence: a path of two lines plus a line
        // versus three lines through a common point.
        let a = validate_pts(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        let b = validate_pts(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        assert!(pts_isomorphic(&a, &b).is_none());
    }
}
