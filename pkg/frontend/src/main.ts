import { createApp } from './app.js';

const root = document.getElementById('app');
if (!root) throw new Error('missing #app mount point');

// Same-origin API by default; override with <meta name="api-base">.
const meta = document.querySelector<HTMLMetaElement>('meta[name="api-base"]');
createApp(root, { baseUrl: meta?.content ?? '' });
