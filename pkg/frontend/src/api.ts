import type { CheckResponse, ExpandResponse, WordListResponse } from './types.js';

export interface CheckApi {
	check(text: string): Promise<CheckResponse>;
}

/** Thin fetch client for the checking service. */
export class ServiceClient implements CheckApi {
	constructor(private baseUrl: string) {}

	async check(text: string): Promise<CheckResponse> {
		const response = await fetch(`${this.baseUrl}/v1/check`, {
			method: 'POST',
			headers: { 'content-type': 'application/json' },
			body: JSON.stringify({ text }),
		});
		if (!response.ok) throw new Error(`check failed: ${response.status}`);
		return (await response.json()) as CheckResponse;
	}

	async wordList(): Promise<WordListResponse> {
		const response = await fetch(`${this.baseUrl}/v1/wordlist`);
		if (!response.ok) throw new Error(`wordlist failed: ${response.status}`);
		return (await response.json()) as WordListResponse;
	}

	async expand(word: string): Promise<ExpandResponse | null> {
		const response = await fetch(
			`${this.baseUrl}/v1/expand?word=${encodeURIComponent(word)}`,
		);
		if (response.status === 404) return null;
		if (!response.ok) throw new Error(`expand failed: ${response.status}`);
		return (await response.json()) as ExpandResponse;
	}
}
