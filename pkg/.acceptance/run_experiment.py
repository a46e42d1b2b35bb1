"""Populates the acceptance experiment directory (same layout the
acceptance tests use, which reuse finished runs)."""
import sys, time
from pathlib import Path

ACC = Path("/root/pkg/.acceptance")
DATA = ACC / "data"

from segadapt.data import default_benchmark_configs, generate_synthetic_domain, save_dataset, load_dataset
from segadapt.evaluation import seed_sweep
from segadapt.nets import SegNet, SegNetConfig
from segadapt.rng import stream
from segadapt.selection import pretrain_source, rank_and_select, score_dataset, write_selection
from segadapt.trainer import HyperParams

SEEDS = [10, 20, 30, 40, 50]

def ensure_data():
    if (DATA / "target_val" / "manifest.json").exists():
        return
    src_cfg, tgt_cfg, val_cfg = default_benchmark_configs(0)
    for sub, cfg in (("source", src_cfg), ("target", tgt_cfg), ("target_val", val_cfg)):
        save_dataset(generate_synthetic_domain(cfg), DATA / sub)
    print("data written", flush=True)

def ensure_entropy_selection():
    sel = ACC / "entropy_selection.json"
    if sel.exists():
        return
    source = load_dataset(DATA / "source")
    target = load_dataset(DATA / "target")
    hp = HyperParams()
    net = SegNet(SegNetConfig(in_channels=3, n_classes=4, widths=tuple(hp.seg_widths),
                              strides=tuple(hp.seg_strides)), stream(0, "init:G"))
    t0 = time.time()
    result = pretrain_source(net, source, val_fraction=0.1, budget=2000, seed=0)
    print(f"pretrain done in {time.time()-t0:.0f}s best mIoU {result.best_miou:.4f}", flush=True)
    scores = score_dataset(result.net, target)
    indices = rank_and_select(scores, 10)
    write_selection(sel, method="entropy", seed=0, ntl=10, indices=indices, scores=scores,
                    pretrain={"budget": 2000, "val_fraction": 0.1,
                              "best_iteration": result.best_iteration,
                              "best_miou": result.best_miou})
    print("entropy selection written:", indices, flush=True)

def main():
    ensure_data()
    hp = HyperParams()
    t0 = time.time()
    result = seed_sweep(DATA, ACC / "sweep", hp, seeds=SEEDS,
                        schemes=["st", "baseline", "ltt", "lts", "lts-mix"],
                        ntl_values=[10], selection="random")
    for s in result.summaries:
        print(f"{s.scheme:9s} mean {s.mean:.4f} std {s.std:.4f} per-seed {[round(m,4) for m in s.mious]}", flush=True)
    print(f"random sweep done in {(time.time()-t0)/60:.1f} min", flush=True)
    ensure_entropy_selection()
    t0 = time.time()
    result = seed_sweep(DATA, ACC / "sweep_entropy", hp, seeds=SEEDS,
                        schemes=["lts-mix"], ntl_values=[10], selection="entropy",
                        selection_file=str(ACC / "entropy_selection.json"))
    for s in result.summaries:
        print(f"entropy {s.scheme:9s} mean {s.mean:.4f} std {s.std:.4f} per-seed {[round(m,4) for m in s.mious]}", flush=True)
    print(f"entropy sweep done in {(time.time()-t0)/60:.1f} min", flush=True)
    print("EXPERIMENT_COMPLETE", flush=True)

if __name__ == "__main__":
    main()
