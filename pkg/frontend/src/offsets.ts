/** Mapping between UTF-8 byte offsets (the wire format) and UTF-16 indices
 * (JavaScript strings).  The service reports annotation spans in bytes; the
 * editor needs string indices to slice and replace.
 */

export class ByteOffsetMap {
	private bytes: number[] = [];
	private units: number[] = [];
	readonly byteLength: number;

	constructor(text: string) {
		let byte = 0;
		let unit = 0;
		for (const ch of text) {
			this.bytes.push(byte);
			this.units.push(unit);
			byte += utf8Length(ch.codePointAt(0)!);
			unit += ch.length;
		}
		this.bytes.push(byte);
		this.units.push(unit);
		this.byteLength = byte;
	}

	/** UTF-16 index for a byte offset, or null off a code-point boundary. */
	utf16Index(byteOffset: number): number | null {
		let lo = 0;
		let hi = this.bytes.length - 1;
		while (lo <= hi) {
			const mid = (lo + hi) >> 1;
			if (this.bytes[mid] === byteOffset) return this.units[mid];
			if (this.bytes[mid] < byteOffset) lo = mid + 1;
			else hi = mid - 1;
		}
		return null;
	}

	/** Byte offset for a UTF-16 index, or null inside a surrogate pair. */
	byteOffset(utf16Index: number): number | null {
		let lo = 0;
		let hi = this.units.length - 1;
		while (lo <= hi) {
			const mid = (lo + hi) >> 1;
			if (this.units[mid] === utf16Index) return this.bytes[mid];
			if (this.units[mid] < utf16Index) lo = mid + 1;
			else hi = mid - 1;
		}
		return null;
	}
}

function utf8Length(codePoint: number): number {
	if (codePoint < 0x80) return 1;
	if (codePoint < 0x800) return 2;
	if (codePoint < 0x10000) return 3;
	return 4;
}
