/* tslint:disable */
/* eslint-disable */

/**
 * Relative frequency of each value among the first `count` terms of the
 * English self-describing sequence started at `seed`.
 */
export function angelini_histogram(seed: number, count: number): string;

/**
 * Append curling numbers to `symbols` until a 1 is appended.
 */
export function curling_extension(symbols: string): string;

/**
 * `n` uniform points on the unit torus (instance `trial` of stream `seed`)
 * and a shortest closed tour through them.
 */
export function torus_tour(n: number, seed: bigint, trial: bigint): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly angelini_histogram: (a: number, b: number) => [number, number];
    readonly curling_extension: (a: number, b: number) => [number, number];
    readonly torus_tour: (a: number, b: bigint, c: bigint) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
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
