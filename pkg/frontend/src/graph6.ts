/** Short-form graph6 parsing and encoding, used to validate pastes locally
 *  before any request leaves the browser. */

export interface DecodedGraph {
  n: number;
  edges: [number, number][];
}

const HEADER = ">>graph6<<";

export function parseGraph6(text: string): DecodedGraph {
  let s = text.trim();
  if (s.startsWith(HEADER)) s = s.slice(HEADER.length).trim();
  if (!s) throw new Error("empty graph6 string");
  const codes = Array.from(s, (ch) => ch.charCodeAt(0));
  if (codes.some((c) => c < 63 || c > 126)) {
    throw new Error("graph6 string contains bytes outside 63..126");
  }
  if (codes[0] === 126) {
    throw new Error("long-form graph6 length header is not supported");
  }
  const n = codes[0] - 63;
  if (n < 1) throw new Error("graph6 string encodes an empty vertex set");
  const bitCount = (n * (n - 1)) / 2;
  const expected = Math.ceil(bitCount / 6);
  const body = codes.slice(1);
  if (body.length !== expected) {
    throw new Error(
      `graph6 body for n=${n} must be ${expected} bytes, got ${body.length}`,
    );
  }
  const bits: number[] = [];
  for (const code of body) {
    const value = code - 63;
    for (let shift = 5; shift >= 0; shift -= 1) bits.push((value >> shift) & 1);
  }
  if (bits.slice(bitCount).some((b) => b !== 0)) {
    throw new Error("graph6 padding bits must be zero");
  }
  const edges: [number, number][] = [];
  let k = 0;
  for (let j = 1; j < n; j += 1) {
    for (let i = 0; i < j; i += 1) {
      if (bits[k] === 1) edges.push([i, j]);
      k += 1;
    }
  }
  return { n, edges };
}

export function encodeGraph6(n: number, edges: [number, number][]): string {
  if (n < 1 || n > 62) throw new Error("short-form graph6 needs 1 <= n <= 62");
  const adjacent = new Set(edges.map(([u, v]) => (u < v ? `${u},${v}` : `${v},${u}`)));
  const bits: number[] = [];
  for (let j = 1; j < n; j += 1) {
    for (let i = 0; i < j; i += 1) {
      bits.push(adjacent.has(`${i},${j}`) ? 1 : 0);
    }
  }
  while (bits.length % 6 !== 0) bits.push(0);
  let out = String.fromCharCode(n + 63);
  for (let k = 0; k < bits.length; k += 6) {
    let value = 0;
    for (const bit of bits.slice(k, k + 6)) value = (value << 1) | bit;
    out += String.fromCharCode(value + 63);
  }
  return out;
}
