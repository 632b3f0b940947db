//! Brute-force reference answers for cross-checking the exact solvers.
//!
//! Everything here works on a plain adjacency matrix and shares no code with
//! the solvers it checks. All routines are exponential; keep inputs tiny.

pub type Adjacency = Vec<Vec<bool>>;

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Adjacency {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Chromatic number by trying every assignment in `k^n` for increasing `k`.
pub fn naive_chromatic(adj: &Adjacency) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            let proper = (0..n).all(|u| (u + 1..n).all(|v| !adj[u][v] || colors[u] != colors[v]));
            if proper {
                return k;
            }
            // odometer step
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n colors always suffice")
}

/// Clique number by scanning every vertex subset.
pub fn naive_clique_number(adj: &Adjacency) -> usize {
    let n = adj.len();
    assert!(n <= 24, "subset scan too large");
    let mut best = 0;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = vs
            .iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| adj[u][v]));
        if clique {
            best = size;
        }
    }
    best
}

fn neighbor_masks(adj: &Adjacency) -> Vec<u32> {
    adj.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect()
}

/// Chromatic number of every induced subgraph, indexed by vertex bitmask:
/// `chi[S] = 1 + min chi[S \ I]` over independent `I` containing the lowest
/// vertex of `S`.
pub fn chi_table(adj: &Adjacency) -> Vec<u8> {
    let n = adj.len();
    assert!(n <= 16, "subset table too large");
    let nb = neighbor_masks(adj);
    let full = 1usize << n;
    let mut independent = vec![false; full];
    independent[0] = true;
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && (nb[v] as usize & rest) == 0;
    }
    let mut chi = vec![0u8; full];
    for s in 1..full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        // subsets of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let i = sub | low;
            if independent[i] {
                best = best.min(1 + chi[s ^ i]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        chi[s] = best;
    }
    chi
}

/// Clique number of every induced subgraph, indexed by vertex bitmask.
pub fn omega_table(adj: &Adjacency) -> Vec<u8> {
    let n = adj.len();
    assert!(n <= 20, "subset table too large");
    let nb = neighbor_masks(adj);
    let full = 1usize << n;
    let mut omega = vec![0u8; full];
    for s in 1..full {
        let v = s.trailing_zeros() as usize;
        let without = s & (s - 1);
        omega[s] = omega[without].max(1 + omega[without & nb[v] as usize]);
    }
    omega
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Chi,
    Omega,
}

/// Minimum deletion set lowering the parameter, scanning all subsets.
/// Returns the size and the lexicographically least minimum witness, or
/// `None` when no admissible set works.
pub fn naive_stability(adj: &Adjacency, param: Param, independent: bool) -> Option<(usize, Vec<usize>)> {
    let n = adj.len();
    let table = match param {
        Param::Chi => chi_table(adj),
        Param::Omega => omega_table(adj),
    };
    let full = (1usize << n) - 1;
    let target = table[full];
    if target == 0 {
        return None;
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in 0..=full {
        if table[full ^ s] >= target {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if independent
            && vs
                .iter()
                .enumerate()
                .any(|(i, &u)| vs[i + 1..].iter().any(|&v| adj[u][v]))
        {
            continue;
        }
        let better = match &best {
            None => true,
            Some((size, w)) => vs.len() < *size || (vs.len() == *size && vs < *w),
        };
        if better {
            best = Some((vs.len(), vs));
        }
    }
    best
}

/// Whether some choice of one vertex per part is independent.
pub fn brute_independent_transversal(adj: &Adjacency, parts: &[Vec<usize>]) -> bool {
    fn go(adj: &Adjacency, parts: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
        let Some((first, rest)) = parts.split_first() else {
            return true;
        };
        for &v in first {
            if chosen.iter().all(|&u| u != v && !adj[u][v]) {
                chosen.push(v);
                if go(adj, rest, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(adj, parts, &mut Vec::new())
}

/// Whether any assignment satisfies every clause; literals are
/// `(variable, positive)`.
pub fn brute_satisfiable(variables: usize, clauses: &[Vec<(usize, bool)>]) -> bool {
    assert!(variables <= 24);
    (0u32..(1u32 << variables)).any(|a| {
        clauses
            .iter()
            .all(|c| c.iter().any(|&(v, pos)| ((a >> v) & 1 == 1) == pos))
    })
}
