/* tslint:disable */
/* eslint-disable */

export class Sweep {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    amplitudes(): Float64Array;
    coefficient(): number;
    exponent(): number;
    ratios(): Float64Array;
    rms_log_residual(): number;
}

export function amplitude_sweep(a_min: number, a_max: number, count: number, log_spacing: boolean): Sweep;

/**
 * Beat period `2π/Δω` of the unit well.
 */
export function beat_period(): number;

/**
 * `|Ψ(x, t)|²` at `points` uniform positions over `[0, 1]`.
 */
export function density_profile(c1: number, c2: number, t: number, points: number): Float64Array;

/**
 * Time-averaged density, row-major with `mix_count` rows (θ from 0 to π/2)
 * of `x_count` columns.
 */
export function heatmap(x_count: number, mix_count: number): Float64Array;

/**
 * Node trajectory over one beat period as interleaved `[t0, x0, t1, x1, ...]`;
 * `x` is NaN where no node exists.
 */
export function node_trajectory(c1: number, c2: number, kind: string, samples: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_sweep_free: (a: number, b: number) => void;
    readonly amplitude_sweep: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly beat_period: () => number;
    readonly density_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly heatmap: (a: number, b: number) => [number, number, number, number];
    readonly node_trajectory: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly sweep_amplitudes: (a: number) => [number, number];
    readonly sweep_coefficient: (a: number) => number;
    readonly sweep_exponent: (a: number) => number;
    readonly sweep_ratios: (a: number) => [number, number];
    readonly sweep_rms_log_residual: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
