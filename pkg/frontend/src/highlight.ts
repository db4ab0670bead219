import type { AppliedAnnotation } from './types.js';

export interface Segment {
	text: string;
	annotation: AppliedAnnotation | null;
}

/** Cut the document into plain and highlighted runs for the backdrop.
 * Annotations sharing a range are collapsed (worst verdict wins); nested or
 * crossing ranges keep the earliest-starting one.
 */
export function segment(text: string, annotations: AppliedAnnotation[]): Segment[] {
	const chosen = new Map<string, AppliedAnnotation>();
	for (const a of annotations) {
		const key = `${a.from}:${a.to}`;
		const existing = chosen.get(key);
		if (!existing || (existing.verdict === 'extra' && a.verdict === 'rejected')) {
			chosen.set(key, a);
		}
	}
	const ordered = [...chosen.values()].sort((x, y) => x.from - y.from || x.to - y.to);
	const segments: Segment[] = [];
	let cursor = 0;
	for (const a of ordered) {
		if (a.from < cursor) continue; // overlap: keep the earlier highlight
		if (a.from > cursor) segments.push({ text: text.slice(cursor, a.from), annotation: null });
		segments.push({ text: text.slice(a.from, a.to), annotation: a });
		cursor = a.to;
	}
	if (cursor < text.length) segments.push({ text: text.slice(cursor), annotation: null });
	return segments;
}

/** The annotation covering a document position, if any. */
export function annotationAt(
	annotations: AppliedAnnotation[],
	position: number,
): AppliedAnnotation | null {
	for (const a of annotations) {
		if (a.from <= position && position <= a.to) return a;
	}
	return null;
}
