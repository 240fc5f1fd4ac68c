//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group on the elements `0..order`, validated at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {}; {:?})", self.order, self.names)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table. Checks run in a fixed order (shape, identity,
    /// inverses, associativity) and report the first failure.
    pub fn new(table: Vec<Vec<usize>>, identity: usize, names: Option<Vec<String>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!("row {i} has length {} but the table has {n} rows", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::BadTable(format!("entry {v} in row {i} is out of range")));
            }
        }
        if identity >= n || (0..n).any(|x| table[identity][x] != x || table[x][identity] != x) {
            return Err(Error::BadIdentity);
        }
        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(Error::NoInverse(x))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::GroupNotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => {
                return Err(Error::BadTable(format!("{} names given for {n} elements", v.len())));
            }
            None => (0..n).map(|i| if i == identity { "e".to_string() } else { i.to_string() }).collect(),
        };
        Ok(FiniteGroup { order: n, identity, table: table.concat(), inverses, names })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a^{-1} h a`.
    pub fn conj(&self, a: usize, h: usize) -> usize {
        self.mul(self.inv(a), self.mul(h, a))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    /// Looks an element up by label, falling back to a numeric index.
    pub fn element_by_name(&self, label: &str) -> Option<usize> {
        let label = label.trim();
        self.names
            .iter()
            .position(|n| n == label)
            .or_else(|| label.parse::<usize>().ok().filter(|&i| i < self.order))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.commute(a, b)))
    }

    /// Largest element order.
    pub fn exponent(&self) -> usize {
        let orders: Vec<usize> = self.elements().map(|g| self.element_order(g)).collect();
        orders.into_iter().fold(1, |acc, o| acc / crate::field::gcd_u64(acc as u64, o as u64) as usize * o)
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        FiniteGroup::new(table, 0, Some(names)).expect("cyclic table is a group")
    }

    /// `A × B` with `(a, b)` stored at index `a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let table = (0..n)
            .map(|x| (0..n).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
            .collect();
        let identity = a.identity * nb + b.identity;
        let names = (0..n)
            .map(|x| {
                if x == identity {
                    "e".to_string()
                } else {
                    format!("({},{})", a.name(x / nb), b.name(x % nb))
                }
            })
            .collect();
        FiniteGroup::new(table, identity, Some(names)).expect("product of groups is a group")
    }

    /// Symmetric group on `n` points; permutations in lexicographic order of
    /// their one-line form, composed right to left.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = (0..n).map(|i| s[t[i]]).collect();
                        index(&st)
                    })
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::new(table, 0, Some(names)).expect("symmetric group table")
    }

    /// Dihedral group of order `2n`: elements `r^i s^j` at index `2i + j`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let m = 2 * n;
        let decode = |x: usize| (x / 2, x % 2);
        let table = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        let (i, a) = decode(x);
                        let (j, b) = decode(y);
                        // r^i s^a r^j s^b = r^{i ± j} s^{a+b}
                        let rot = if a == 0 { (i + j) % n } else { (i + n - j % n) % n };
                        2 * rot + (a + b) % 2
                    })
                    .collect()
            })
            .collect();
        let names = (0..m)
            .map(|x| {
                let (i, a) = decode(x);
                match (i, a) {
                    (0, 0) => "e".to_string(),
                    (0, 1) => "s".to_string(),
                    (1, 0) => "r".to_string(),
                    (1, 1) => "rs".to_string(),
                    (i, 0) => format!("r^{i}"),
                    (i, _) => format!("r^{i}s"),
                }
            })
            .collect();
        FiniteGroup::new(table, 0, Some(names)).expect("dihedral table")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> FiniteGroup {
        // index = 2·unit + sign, unit in {1, i, j, k}
        let unit_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (x, 0),
                (x, y) if x == y => (0, 1),
                (1, 2) => (3, 0),
                (2, 1) => (3, 1),
                (2, 3) => (1, 0),
                (3, 2) => (1, 1),
                (3, 1) => (2, 0),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (u, s) = unit_mul(x / 2, y / 2);
                        2 * u + (s + x % 2 + y % 2) % 2
                    })
                    .collect()
            })
            .collect();
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
        FiniteGroup::new(table, 0, Some(names)).expect("quaternion table")
    }

    /// Small named groups: `Z<n>`, `K4`/`V4`, `S3`, `S4`, `D<n>` (order 2n),
    /// `Q8`, `Z2^3`, and products written `AxB`.
    pub fn named(name: &str) -> Option<FiniteGroup> {
        let name = name.trim();
        if name.contains('x') {
            let mut parts = name.split('x');
            let first = FiniteGroup::named(parts.next()?)?;
            return parts.try_fold(first, |acc, p| Some(FiniteGroup::direct_product(&acc, &FiniteGroup::named(p)?)));
        }
        if let Some((base, exp)) = name.split_once('^') {
            let b = FiniteGroup::named(base)?;
            let e: usize = exp.parse().ok().filter(|&e| e >= 1)?;
            return Some((1..e).fold(b.clone(), |acc, _| FiniteGroup::direct_product(&acc, &b)));
        }
        match name {
            "K4" | "V4" => return FiniteGroup::named("Z2xZ2"),
            "Q8" => return Some(FiniteGroup::quaternion()),
            "trivial" | "1" => return Some(FiniteGroup::cyclic(1)),
            _ => {}
        }
        let (head, tail) = name.split_at(1);
        let n: usize = tail.parse().ok().filter(|&n| n >= 1)?;
        match head {
            "Z" | "C" => Some(FiniteGroup::cyclic(n)),
            "S" if n <= 5 => Some(FiniteGroup::symmetric(n)),
            "D" => Some(FiniteGroup::dihedral(n)),
            _ => None,
        }
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// A subgroup, stored as its sorted member indices in the parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        Subgroup { members: vec![g.identity()] }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup { members: g.elements().collect() }
    }

    /// Checks closure; `members` need not be sorted.
    pub fn from_members(g: &FiniteGroup, members: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.iter().any(|&x| x >= g.order()) {
            return Err(Error::BadTable("subgroup member out of range".into()));
        }
        if !set.contains(&g.identity()) {
            return Err(Error::BadTable("subgroup does not contain the identity".into()));
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) {
                return Err(Error::BadTable(format!("subgroup is not closed under inverting {a}")));
            }
            for &b in &set {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::BadTable(format!("subgroup is not closed under {a}·{b}")));
                }
            }
        }
        Ok(Subgroup { members: set.into_iter().collect() })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// Position of a member in the sorted member list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    /// The subgroup as a standalone group on positions `0..|H|`.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let pos = |x: usize| self.position(x).expect("closed subgroup");
        let table = self
            .members
            .iter()
            .map(|&a| self.members.iter().map(|&b| pos(g.mul(a, b))).collect())
            .collect();
        let names = self.members.iter().map(|&a| g.name(a).to_string()).collect();
        FiniteGroup::new(table, pos(g.identity()), Some(names)).expect("subgroup is a group")
    }

    /// `a^{-1} H a`.
    pub fn conjugate(&self, g: &FiniteGroup, a: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&h| g.conj(a, h)).collect();
        members.sort_unstable();
        Subgroup { members }
    }
}

/// Smallest subgroup containing `generators`.
pub fn subgroup_closure(g: &FiniteGroup, generators: &[usize]) -> Subgroup {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    let mut frontier: Vec<usize> = vec![g.identity()];
    let gens: Vec<usize> = generators.to_vec();
    while let Some(x) = frontier.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    // in a finite group the monoid generated is already a subgroup
    Subgroup { members: set.into_iter().collect() }
}

/// All subgroups, sorted by order and then by member list.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let cyclic: BTreeSet<Subgroup> = g.elements().map(|x| subgroup_closure(g, &[x])).collect();
    let mut found: BTreeSet<Subgroup> = cyclic.clone();
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            if c.members.iter().all(|&x| h.contains(x)) {
                continue;
            }
            let mut gens = h.members.clone();
            gens.extend_from_slice(&c.members);
            let j = subgroup_closure(g, &gens);
            if found.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
    out
}

/// Smallest `a` with `a^{-1} H1 a = H2`, if any.
pub fn subgroups_conjugate(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> Option<usize> {
    if h1.order() != h2.order() {
        return None;
    }
    let mut candidates: Vec<usize> = g.elements().collect();
    // prefer the identity so that equal subgroups report it
    candidates.sort_by_key(|&a| a != g.identity());
    candidates.into_iter().find(|&a| h1.conjugate(g, a) == *h2)
}
