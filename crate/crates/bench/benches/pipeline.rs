use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use oamc_bench::{fuzz_circuit, qc, seeded_state};
use oamc_core::compiler::{compile_circuit, optimize};
use oamc_core::elementary::{apply_cperm, apply_cz, apply_hadamard, apply_phase, apply_program};
use oamc_core::generators::qft_circuit;
use oamc_core::oracle::run_circuit;

fn elementary_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("elementary");
    for n in [8usize, 12, 14] {
        let base = seeded_state(n, 0xB0B + n as u64);
        group.bench_with_input(BenchmarkId::new("hadamard", n), &n, |b, _| {
            let mut s = base.clone();
            b.iter(|| apply_hadamard(black_box(&mut s)));
        });
        group.bench_with_input(BenchmarkId::new("phase", n), &n, |b, _| {
            let mut s = base.clone();
            b.iter(|| apply_phase(black_box(&mut s), 0.37));
        });
        group.bench_with_input(BenchmarkId::new("cperm", n), &n, |b, _| {
            let mut s = base.clone();
            b.iter(|| apply_cperm(black_box(&mut s)));
        });
        group.bench_with_input(BenchmarkId::new("cz", n), &n, |b, _| {
            let mut s = base.clone();
            b.iter(|| apply_cz(black_box(&mut s)).unwrap());
        });
    }
    group.finish();
}

fn compile(c: &mut Criterion) {
    let mut group = c.benchmark_group("compile");
    for n in [4usize, 8, 12] {
        let circ = qft_circuit(qc(n)).unwrap();
        group.bench_with_input(BenchmarkId::new("qft", n), &circ, |b, circ| {
            b.iter(|| compile_circuit(black_box(circ)).unwrap());
        });
        let (raw, _) = compile_circuit(&circ).unwrap();
        group.bench_with_input(BenchmarkId::new("optimize_qft", n), &raw, |b, raw| {
            b.iter(|| optimize(black_box(raw)));
        });
    }
    group.finish();
}

fn simulate(c: &mut Criterion) {
    let mut group = c.benchmark_group("simulate");
    group.sample_size(20);
    for n in [6usize, 8, 10] {
        let circ = fuzz_circuit(n, 30, 0x5EED + n as u64);
        let (raw, _) = compile_circuit(&circ).unwrap();
        let prog = optimize(&raw);
        let base = seeded_state(n, 0xF00 + n as u64);
        group.bench_with_input(
            BenchmarkId::new("compiled_program", n),
            &prog,
            |b, prog| {
                b.iter(|| {
                    let mut s = base.clone();
                    apply_program(&mut s, black_box(prog)).unwrap();
                    s
                });
            },
        );
        group.bench_with_input(BenchmarkId::new("oracle_circuit", n), &circ, |b, circ| {
            b.iter(|| {
                let mut s = base.clone();
                run_circuit(&mut s, black_box(circ)).unwrap();
                s
            });
        });
    }
    group.finish();
}

criterion_group!(benches, elementary_ops, compile, simulate);
criterion_main!(benches);
