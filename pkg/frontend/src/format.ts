/** Presentation-only formatting of server-provided numbers. */

export function fmt2(value: number): string {
  return value.toFixed(2);
}

export function fmt4(value: number): string {
  return value.toFixed(4);
}

/** Percent position for laying out bands and bars; visual only. */
export function pct(fraction: number): string {
  return `${(fraction * 100).toFixed(2)}%`;
}

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
