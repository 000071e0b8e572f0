//! Construction of the irreducible root systems of types A through G.
//!
//! Roots are stored as integer coordinate vectors over the simple-root basis
//! (Bourbaki numbering). The bilinear form is scaled so that short roots have
//! squared length 2, which keeps every inner product an integer. Positive
//! roots come first, ordered by (height, lexicographic coordinates), and the
//! negative of root `i` sits at index `i ± N/2`.

use std::collections::HashMap;
use std::fmt;

/// The simple Lie type families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// An irreducible type, e.g. `B3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<RootSystemType, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 is rejected: callers must use the isomorphic A3.
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(RootSystemError::InvalidType { family, rank })
        }
    }

    /// Number of roots of this type.
    pub fn root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSystemError {
    InvalidType { family: Family, rank: usize },
}

impl fmt::Display for RootSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemError::InvalidType { family, rank } => {
                write!(
                    f,
                    "invalid root system type {}{} (A: rank>=1, B/C: rank>=2, D: rank>=4 \
                     (use A3 for D3), E: 6..8, F: 4, G: 2)",
                    family.letter(),
                    rank
                )
            }
        }
    }
}

impl std::error::Error for RootSystemError {}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }
}

pub const NOT_A_ROOT: u16 = u16::MAX;

/// An irreducible root system with its addition table and bilinear form.
pub struct RootSystem {
    rtype: RootSystemType,
    rank: usize,
    /// Coordinate vectors over the simple roots; positives first.
    roots: Vec<Vec<i64>>,
    /// Involution `i -> index of -root(i)`.
    neg: Vec<usize>,
    /// `addtab[i*N+j]` = index of `root(i)+root(j)`, or `NOT_A_ROOT`.
    addtab: Vec<u16>,
    /// `cartan[i][j] = <alpha_j, alpha_i^v>`.
    cartan: Vec<Vec<i64>>,
    /// Inner products `(root(i), root(j))`, short roots normalized to 2.
    form: Vec<Vec<i64>>,
    heights: Vec<i64>,
    /// `(alpha_i, alpha_i)/2` per simple root.
    half_norms: Vec<i64>,
    /// Index of simple root `j` in `roots`.
    simple_idx: Vec<usize>,
    index_of: HashMap<Vec<i64>, usize>,
    npos: usize,
}

fn cartan_matrix(rtype: RootSystemType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let l = rtype.rank;
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // bonds[(i, j)] with value <alpha_j, alpha_i^v>
    let bond = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, vij: i64, vji: i64| {
        c[i][j] = vij;
        c[j][i] = vji;
    };
    let mut half_norms = vec![1i64; l];
    match rtype.family {
        Family::A => {
            for i in 0..l - 1 {
                bond(&mut c, i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_l short, the rest long
            for i in 0..l - 1 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            // <alpha_{l-1}, alpha_l^v> = -2
            c[l - 1][l - 2] = -2;
            for h in half_norms.iter_mut().take(l - 1) {
                *h = 2;
            }
        }
        Family::C => {
            // alpha_l long, the rest short
            for i in 0..l - 1 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            // <alpha_l, alpha_{l-1}^v> = -2
            c[l - 2][l - 1] = -2;
            half_norms[l - 1] = 2;
        }
        Family::D => {
            for i in 0..l - 2 {
                bond(&mut c, i, i + 1, -1, -1);
            }
            bond(&mut c, l - 3, l - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-..-l with node 2 attached to node 4.
            bond(&mut c, 0, 2, -1, -1);
            bond(&mut c, 1, 3, -1, -1);
            for i in 2..l - 1 {
                bond(&mut c, i, i + 1, -1, -1);
            }
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            bond(&mut c, 0, 1, -1, -1);
            bond(&mut c, 2, 3, -1, -1);
            c[2][1] = -2;
            c[1][2] = -1;
            half_norms[0] = 2;
            half_norms[1] = 2;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
            half_norms[1] = 3;
        }
    }
    (c, half_norms)
}

impl RootSystem {
    /// Builds the root system from its Cartan matrix.
    pub fn build(rtype: RootSystemType) -> RootSystem {
        let l = rtype.rank;
        let (cartan, half_norms) = cartan_matrix(rtype);

        // Generate positive roots level by level. For a root a and simple j,
        // a + alpha_j is a root iff r - <a, alpha_j^v> >= 1 where r is the
        // largest t with a - t*alpha_j a root.
        let mut pos: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        for j in 0..l {
            let mut coords = vec![0i64; l];
            coords[j] = 1;
            seen.insert(coords.clone(), ());
            pos.push(coords);
        }
        let mut level_start = 0;
        while level_start < pos.len() {
            let level_end = pos.len();
            for idx in level_start..level_end {
                let coords = pos[idx].clone();
                for j in 0..l {
                    let pairing: i64 = (0..l).map(|i| coords[i] * cartan[j][i]).sum();
                    let mut r = 0i64;
                    loop {
                        let mut down = coords.clone();
                        down[j] -= r + 1;
                        let valid = down.iter().all(|&k| k >= 0) && down.iter().any(|&k| k > 0);
                        if valid && seen.contains_key(&down) {
                            r += 1;
                        } else {
                            break;
                        }
                    }
                    if r - pairing >= 1 {
                        let mut up = coords.clone();
                        up[j] += 1;
                        if !seen.contains_key(&up) {
                            seen.insert(up.clone(), ());
                            pos.push(up);
                        }
                    }
                }
            }
            level_start = level_end;
        }

        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let npos = pos.len();
        let n = 2 * npos;
        let mut roots = pos;
        for i in 0..npos {
            let negated: Vec<i64> = roots[i].iter().map(|&k| -k).collect();
            roots.push(negated);
        }

        let mut index_of = HashMap::with_capacity(n);
        for (i, r) in roots.iter().enumerate() {
            index_of.insert(r.clone(), i);
        }

        let neg: Vec<usize> = (0..n).map(|i| (i + npos) % n).collect();
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();
        let simple_idx: Vec<usize> = (0..l)
            .map(|j| {
                let mut coords = vec![0i64; l];
                coords[j] = 1;
                index_of[&coords]
            })
            .collect();

        // Bilinear form: (alpha_i, alpha_j) = half_norms[i] * cartan[i][j] on
        // simple roots, extended bilinearly.
        let mut simple_form = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                simple_form[i][j] = half_norms[i] * cartan[i][j];
            }
        }
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = 0i64;
                for a in 0..l {
                    if roots[i][a] == 0 {
                        continue;
                    }
                    for b in 0..l {
                        v += roots[i][a] * roots[j][b] * simple_form[a][b];
                    }
                }
                form[i][j] = v;
            }
        }

        let mut addtab = vec![NOT_A_ROOT; n * n];
        for i in 0..n {
            for j in 0..n {
                let sum: Vec<i64> = roots[i]
                    .iter()
                    .zip(roots[j].iter())
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(&k) = index_of.get(&sum) {
                    addtab[i * n + j] = k as u16;
                }
            }
        }

        let rs = RootSystem {
            rtype,
            rank: l,
            roots,
            neg,
            addtab,
            cartan,
            form,
            heights,
            half_norms,
            simple_idx,
            index_of,
            npos,
        };
        debug_assert_eq!(rs.num_roots(), rtype.root_count());
        rs
    }

    pub fn rtype(&self) -> RootSystemType {
        self.rtype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    pub fn form(&self, i: usize, j: usize) -> i64 {
        self.form[i][j]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_root(&self, j: usize) -> usize {
        self.simple_idx[j]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index_of.get(coords).copied()
    }

    /// Index of `root(i) + root(j)` when the sum is a root.
    pub fn add_roots(&self, i: usize, j: usize) -> Option<usize> {
        let k = self.addtab[i * self.roots.len() + j];
        if k == NOT_A_ROOT {
            None
        } else {
            Some(k as usize)
        }
    }

    /// Fundamental-weight coordinates of root `i`: `m_j = <root(i), alpha_j^v>`.
    pub fn root_to_weight(&self, i: usize) -> Weight {
        self.weight_of_coords(&self.roots[i])
    }

    /// Fundamental-weight coordinates of an arbitrary simple-root combination.
    pub fn weight_of_coords(&self, coords: &[i64]) -> Weight {
        let l = self.rank;
        let m = (0..l)
            .map(|j| (0..l).map(|k| coords[k] * self.cartan[j][k]).sum())
            .collect();
        Weight(m)
    }

    /// `(alpha_i, alpha_i)/2` for simple root `j`.
    pub fn simple_half_norm(&self, j: usize) -> i64 {
        self.half_norms[j]
    }

    /// `<root(i), root(a)^v>`, always an integer.
    pub fn pairing(&self, i: usize, a: usize) -> i64 {
        let two_ip = 2 * self.form[i][a];
        debug_assert_eq!(two_ip % self.form[a][a], 0);
        two_ip / self.form[a][a]
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} roots)", self.rtype, self.roots.len())
    }
}
