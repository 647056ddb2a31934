use cherednik_core::cherednik::{
    closed_generators, corner_chains, is_simple_spectrum, norm, solve_generator_equations,
};
use cherednik_core::combinatorics::syt_enumerate;
use cherednik_core::oracle::TruncatedModule;
use cherednik_core::scalars::{int, rat};
use cherednik_core::{build_rep, Composition, Cyclotomic, MultiPartition, ParamPoint};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn rank_five() -> (MultiPartition, ParamPoint) {
    let shape = MultiPartition::from_parts(&[&[3, 2], &[3], &[], &[5, 4, 4], &[]]);
    let p = ParamPoint::from_free_d(5, int(1), rat(2, 7), &[rat(-17, 7), rat(-5, 7), rat(12, 7), rat(-6, 7)]).unwrap();
    (shape, p)
}

fn scalars(c: &mut Criterion) {
    let x = Cyclotomic::from_poly(5, &[rat(1, 2), rat(-3, 7), int(2), rat(5, 3)]);
    c.bench_function("cyclotomic inverse r=5", |b| b.iter(|| black_box(&x).inv().unwrap()));
}

fn combinatorics(c: &mut Criterion) {
    let shape = MultiPartition::from_parts(&[&[3, 2], &[2, 1]]);
    c.bench_function("syt ((3,2),(2,1))", |b| b.iter(|| syt_enumerate(black_box(&shape))));
    c.bench_function("seminormal rep ((2,1),(1,1))", |b| {
        b.iter(|| build_rep(black_box(&MultiPartition::from_parts(&[&[2, 1], &[1, 1]]))))
    });
}

fn formulas(c: &mut Criterion) {
    let (shape, p) = rank_five();
    let t = syt_enumerate(&MultiPartition::from_parts(&[&[3, 2], &[3]])).pop().unwrap();
    let mu = Composition::new(vec![4, 0, 2, 7, 1, 1, 3, 0]);
    c.bench_function("norm n=8", |b| b.iter(|| norm(black_box(&mu), black_box(&t))));
    c.bench_function("spectrum rank five", |b| b.iter(|| is_simple_spectrum(&shape, &p).unwrap()));
    c.bench_function("generators and chains rank five", |b| {
        b.iter(|| {
            let gens = solve_generator_equations(&shape, &p).unwrap();
            corner_chains(&shape, &gens).unwrap()
        })
    });
    let hook = MultiPartition::from_parts(&[&[2, 1]]);
    let q = ParamPoint::new(1, int(1), rat(1, 3), vec![int(0)]).unwrap();
    c.bench_function("generators ((2,1))", |b| b.iter(|| closed_generators(&hook, &q).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let shape = MultiPartition::from_parts(&[&[1], &[1], &[1]]);
    let p = ParamPoint::from_free_d(3, rat(4, 3), rat(1, 13), &[rat(2, 17), rat(-5, 19)]).unwrap();
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("eigenbasis degree 3, r=3 n=3", |b| {
        b.iter(|| {
            let m = TruncatedModule::new(&shape, &p, 3).unwrap();
            m.joint_eigenbasis(3).unwrap()
        })
    });
    g.bench_function("gram blocks to degree 3, r=3 n=3", |b| {
        b.iter(|| TruncatedModule::new(&shape, &p, 3).unwrap().gram_blocks(3).unwrap())
    });
    g.finish();
}

criterion_group!(benches, scalars, combinatorics, formulas, oracle);
criterion_main!(benches);
