/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const angelini_histogram: (a: number, b: number) => [number, number];
export const curling_extension: (a: number, b: number) => [number, number];
export const torus_tour: (a: number, b: bigint, c: bigint) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
