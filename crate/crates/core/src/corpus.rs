//! Named test polytopes and a seeded random generator.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polytope::{build_polytope, LatticePoint, Polytope};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub polytope: Polytope,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, polytope: Polytope) -> Self {
        CorpusEntry {
            name: name.into(),
            polytope,
        }
    }
}

/// Builds a polytope from integer rows; panics on degenerate input, so only
/// use it for hard-coded shapes.
pub fn from_rows(rows: &[&[i64]]) -> Polytope {
    let d = rows[0].len();
    let pts: Vec<LatticePoint> = rows
        .iter()
        .map(|r| LatticePoint::from(r.to_vec()))
        .collect();
    build_polytope(&pts, d).expect("corpus polytope is full-dimensional")
}

pub fn polygon(vertices: &[[i64; 2]]) -> Polytope {
    let rows: Vec<&[i64]> = vertices.iter().map(|v| &v[..]).collect();
    from_rows(&rows)
}

fn cube_points(d: usize, lo: i64, hi: i64) -> Vec<LatticePoint> {
    (0..1u32 << d)
        .map(|mask| {
            LatticePoint::from(
                (0..d)
                    .map(|i| if mask >> i & 1 == 1 { hi } else { lo })
                    .collect::<Vec<_>>(),
            )
        })
        .collect()
}

fn unit_vector(d: usize, i: usize, value: i64) -> LatticePoint {
    let mut v = vec![0; d];
    v[i] = value;
    LatticePoint::from(v)
}

/// `[0, 1]^d`.
pub fn unit_cube(d: usize) -> Polytope {
    build_polytope(&cube_points(d, 0, 1), d).expect("cube")
}

/// `[-1, 1]^d`.
pub fn centered_cube(d: usize) -> Polytope {
    build_polytope(&cube_points(d, -1, 1), d).expect("cube")
}

/// `conv{0, e_1, ..., e_d}`.
pub fn standard_simplex(d: usize) -> Polytope {
    let mut pts = vec![LatticePoint::from(vec![0; d])];
    pts.extend((0..d).map(|i| unit_vector(d, i, 1)));
    build_polytope(&pts, d).expect("simplex")
}

/// `conv{±e_1, ..., ±e_d}`.
pub fn cross_polytope(d: usize) -> Polytope {
    let pts: Vec<LatticePoint> = (0..d)
        .flat_map(|i| [unit_vector(d, i, 1), unit_vector(d, i, -1)])
        .collect();
    build_polytope(&pts, d).expect("cross-polytope")
}

/// Five hand-picked lattice polytopes without special symmetry, for
/// `d` in 2..=4.
pub fn irregular(d: usize) -> Vec<CorpusEntry> {
    let shapes: Vec<(&str, Vec<&[i64]>)> = match d {
        2 => vec![
            ("triangle-a", vec![&[0, 0], &[3, 1], &[1, 4]]),
            (
                "pentagon",
                vec![&[0, 0], &[2, 0], &[3, 2], &[1, 3], &[-1, 1]],
            ),
            ("quad", vec![&[0, 0], &[4, 1], &[3, 3], &[1, 2]]),
            ("thin-triangle", vec![&[0, 0], &[5, 2], &[2, 1]]),
            (
                "hexagon",
                vec![&[1, 0], &[3, 1], &[3, 3], &[1, 4], &[-1, 3], &[-1, 1]],
            ),
        ],
        3 => vec![
            (
                "reeve-3",
                vec![&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 3]],
            ),
            (
                "pyramid",
                vec![&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 3]],
            ),
            (
                "prism",
                vec![
                    &[0, 0, 0],
                    &[3, 0, 0],
                    &[0, 2, 0],
                    &[0, 0, 2],
                    &[3, 0, 2],
                    &[0, 2, 2],
                ],
            ),
            (
                "wedge",
                vec![&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 2]],
            ),
            (
                "skew",
                vec![
                    &[0, 0, 0],
                    &[3, 1, 0],
                    &[1, 2, 1],
                    &[0, 1, 3],
                    &[2, 2, 2],
                    &[1, -1, 1],
                ],
            ),
        ],
        4 => vec![
            (
                "tall-simplex",
                vec![
                    &[0, 0, 0, 0],
                    &[1, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[0, 0, 1, 0],
                    &[1, 1, 1, 2],
                ],
            ),
            (
                "cube-pyramid",
                vec![
                    &[0, 0, 0, 0],
                    &[1, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[1, 1, 0, 0],
                    &[0, 0, 1, 0],
                    &[1, 0, 1, 0],
                    &[0, 1, 1, 0],
                    &[1, 1, 1, 0],
                    &[1, 0, 1, 2],
                ],
            ),
            (
                "triangle-x-square",
                vec![
                    &[0, 0, 0, 0],
                    &[2, 0, 0, 0],
                    &[0, 1, 0, 0],
                    &[0, 0, 1, 0],
                    &[2, 0, 1, 0],
                    &[0, 1, 1, 0],
                    &[0, 0, 0, 1],
                    &[2, 0, 0, 1],
                    &[0, 1, 0, 1],
                    &[0, 0, 1, 1],
                    &[2, 0, 1, 1],
                    &[0, 1, 1, 1],
                ],
            ),
            (
                "skew-simplex",
                vec![
                    &[0, 0, 0, 0],
                    &[2, 1, 0, 0],
                    &[0, 1, 2, 0],
                    &[1, 0, 1, 1],
                    &[0, 2, 1, 3],
                ],
            ),
            (
                "lumpy",
                vec![
                    &[0, 0, 0, 0],
                    &[2, 0, 0, 0],
                    &[0, 2, 0, 0],
                    &[0, 0, 2, 0],
                    &[0, 0, 0, 2],
                    &[1, 1, 1, 1],
                    &[2, 1, 0, 1],
                    &[-1, 1, 1, 0],
                ],
            ),
        ],
        _ => Vec::new(),
    };
    shapes
        .into_iter()
        .map(|(name, rows)| CorpusEntry::new(format!("{name}-d{d}"), from_rows(&rows)))
        .collect()
}

/// Unit cubes and standard simplices for d = 2..5, cross-polytopes and
/// centered cubes for d = 2..4, and the irregular shapes for d = 2..4.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(build_standard_corpus).clone()
}

fn build_standard_corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for d in 2..=5 {
        out.push(CorpusEntry::new(format!("unit-cube-d{d}"), unit_cube(d)));
        out.push(CorpusEntry::new(
            format!("simplex-d{d}"),
            standard_simplex(d),
        ));
    }
    for d in 2..=4 {
        out.push(CorpusEntry::new(format!("cross-d{d}"), cross_polytope(d)));
        out.push(CorpusEntry::new(
            format!("centered-cube-d{d}"),
            centered_cube(d),
        ));
    }
    for d in 2..=4 {
        out.extend(irregular(d));
    }
    out
}

/// Convex hull of `d + 2 ..= d + 5` random points of `[-radius, radius]^d`,
/// redrawn until full-dimensional.
pub fn random_polytope<R: Rng>(d: usize, radius: i64, rng: &mut R) -> Polytope {
    loop {
        let n = rng.gen_range(d + 2..=d + 5);
        let pts: Vec<LatticePoint> = (0..n)
            .map(|_| {
                LatticePoint::from(
                    (0..d)
                        .map(|_| rng.gen_range(-radius..=radius))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        if let Ok(p) = build_polytope(&pts, d) {
            return p;
        }
    }
}

/// `count` random polytopes in dimension `d`, reproducible from `seed`.
pub fn random_corpus(d: usize, count: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(d as u64));
    (0..count)
        .map(|i| {
            CorpusEntry::new(
                format!("random-d{d}-s{seed}-{i}"),
                random_polytope(d, 2, &mut rng),
            )
        })
        .collect()
}

/// Fano polytopes in d = 2, 3; `true` marks the reflexive ones.
pub fn fano_corpus() -> Vec<(CorpusEntry, bool)> {
    let reflexive = [
        ("cross-d2", cross_polytope(2)),
        ("cross-d3", cross_polytope(3)),
        ("centered-cube-d2", centered_cube(2)),
        ("centered-cube-d3", centered_cube(3)),
        ("p2-triangle", polygon(&[[1, 0], [0, 1], [-1, -1]])),
        (
            "hexagon",
            polygon(&[[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]]),
        ),
        ("wide-triangle", polygon(&[[1, 0], [-1, 2], [-1, -2]])),
        (
            "p3-simplex",
            from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
        ),
    ];
    let non_reflexive = [
        ("tall-triangle", polygon(&[[1, 0], [0, 1], [-1, -3]])),
        ("skew-quad", polygon(&[[2, 1], [-1, 1], [-1, -2], [1, -1]])),
        (
            "weighted-simplex",
            from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -2, -3]]),
        ),
        (
            "tall-bipyramid",
            from_rows(&[
                &[1, 0, 0],
                &[0, 1, 0],
                &[-1, -1, 0],
                &[0, 0, 1],
                &[1, 1, -3],
            ]),
        ),
    ];
    reflexive
        .into_iter()
        .map(|(n, p)| (CorpusEntry::new(format!("fano-{n}"), p), true))
        .chain(
            non_reflexive
                .into_iter()
                .map(|(n, p)| (CorpusEntry::new(format!("fano-{n}"), p), false)),
        )
        .collect()
}
